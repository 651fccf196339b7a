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

#ifndef EXACTMIP_CUTS_HPP_
#define EXACTMIP_CUTS_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "exactmip/lp.hpp"
#include "exactmip/model.hpp"
#include "exactmip/proof.hpp"

namespace exactmip {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gomory mixed-integer cut together with the split disjunction it is
/// valid on: splitCoefficients^T x <= splitRhs or >= splitRhs + 1.
/// The split is x_B plus integer multiples of the integer nonbasic
/// columns; it reduces to x_B <= splitValue when those multiples vanish.
struct CutCandidate {
  LinearConstraint constraint;  // sense >=
  ColumnRef sourceBasicVar;
  int splitVar = -1;
  Integer splitValue;  // floor of the LP value of splitVar
  SparseVector splitCoefficients;
  Integer splitRhs;
  /// Duals of the two side LPs, filled by certifySplitCut (empty for an
  /// infeasible side or a cut that restates a model row).
  std::vector<Rational> branchDuals[2];
};

/// Strengthened GMI cut from the tableau row of an integral basic
/// variable. Nonbasic columns are measured from the bound they sit at in
/// `local`. Returns nullopt when some nonbasic column with a nonzero row
/// entry is free. Throws std::invalid_argument if the variable is not
/// integral, not basic, or has an integral LP value.
std::optional<CutCandidate> generateGMI(const Instance& instance,
                                        const LocalBounds& local,
                                        const LPResult& lp, int basicVar);

/// Proves `cut` in `log` from the rows of `instance` (referenced through
/// `rows`) and the local box (referenced through `sources`): two side LPs
/// minimizing the cut's left-hand side under each half of the split,
/// then one unsplitting line. A cut that is a positive multiple of a row
/// gets a single combination line instead. Returns the line stating the
/// cut. Throws CertificationError if a side does not reach the cut's
/// right-hand side.
int certifySplitCut(ProofLog& log, const Instance& instance,
                    const std::vector<RowRefs>& rows,
                    const BoundSources& sources, const LocalBounds& local,
                    CutCandidate& cut);

}  // namespace exactmip

#endif  // EXACTMIP_CUTS_HPP_
