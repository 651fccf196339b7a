// Copyright 2026 The exactmip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXACTMIP_PROPAGATION_HPP_
#define EXACTMIP_PROPAGATION_HPP_

#include <optional>
#include <vector>

#include "exactmip/lp.hpp"
#include "exactmip/model.hpp"
#include "exactmip/proof.hpp"

namespace exactmip {

/// g^T x >= beta, with the proof reference it comes from. refSign is -1
/// when `ref` states the row as <= (g = -a, beta = -b).
struct PropRow {
  SparseVector g;
  Rational beta;
  ProofRef ref;
  int refSign = 1;
};

/// The model rows in >= form; equality rows contribute both directions.
std::vector<PropRow> propagationRows(const Instance& instance);

struct Infeasibility {
  enum class Kind { EmptyDomain, RowInfeasible };
  Kind kind = Kind::EmptyDomain;
  int variable = -1;  // EmptyDomain
  int row = -1;       // RowInfeasible, index into the row list
  std::optional<int> proofLine;
};

struct PropagationResult {
  LocalBounds bounds;
  std::optional<Infeasibility> infeasible;
  int tightenings = 0;
};

struct PropagationLog {
  ProofLog* log = nullptr;
  BoundSources* sources = nullptr;
};

/// Activity-based bound tightening to a fixpoint or `maxRounds` sweeps.
/// Integral domains are rounded inward. Every tightening keeps all
/// integer-feasible points. With a proof log, each bound change gets a
/// derived line and `sources` is updated to it; an infeasibility gets a
/// contradiction line.
PropagationResult propagate(const Instance& instance,
                            const std::vector<PropRow>& rows,
                            LocalBounds local, int maxRounds = 20,
                            PropagationLog proof = {});

/// Propagation over the model rows only.
PropagationResult propagateNode(const Instance& instance,
                                const LocalBounds& local);

}  // namespace exactmip

#endif  // EXACTMIP_PROPAGATION_HPP_
