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

#ifndef EXACTMIP_BNB_HPP_
#define EXACTMIP_BNB_HPP_

#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "exactmip/cuts.hpp"
#include "exactmip/lp.hpp"
#include "exactmip/model.hpp"
#include "exactmip/proof.hpp"
#include "exactmip/pseudocost.hpp"

namespace exactmip {

enum class SolveStatus { Optimal, Infeasible, Unbounded, LimitReached };

const char* toString(SolveStatus status);

struct SolveParams {
  std::optional<long> nodeLimit;
  double timeLimitSeconds = std::numeric_limits<double>::infinity();
  bool cuts = true;
  bool heuristics = true;
  BranchingRule branching = BranchingRule::Aps;
  Rational gamma = defaultDiscount();
  int reliability = 1;
  /// Dual proofs kept for propagation, oldest dropped first.
  int proofRetention = 100;
  int propagationRounds = 20;
};

struct SolveStats {
  long nodes = 0;
  long lpIterations = 0;
  int cutsApplied = 0;
  int repairedSolutions = 0;
  int dualProofs = 0;
  double seconds = 0;
};

/// Everything a certificate needs, in the internal minimization form.
struct SolveTrace {
  explicit SolveTrace(const Instance& instance) : log(instance) {}

  ProofLog log;
  bool infeasible = false;
  /// Proven lower bound on the internal objective and best solution value.
  ExtRational lowerBound = ExtRational::negInf();
  ExtRational upperBound = ExtRational::posInf();
  std::vector<Assignment> solutions;
  /// The last line of `log`; it proves the goal with no assumptions.
  int finalLine = -1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::LimitReached;
  std::optional<Assignment> incumbent;
  /// Reported in the instance's own sense with the offset added.
  ExtRational primalBound;
  ExtRational dualBound;
  SolveStats stats;
  /// Present for Optimal and Infeasible; references the solved instance.
  std::shared_ptr<SolveTrace> trace;
  /// One GMI cut per root fractional basic variable that was added.
  std::vector<CutCandidate> cuts;
};

/// Exact LP-based branch-and-bound. The returned trace refers to
/// `instance`, which must outlive it.
SolveResult solve(const Instance& instance, const SolveParams& params = {});

/// Rounds every integral variable of `candidate` to the nearest integer
/// (halves upwards) inside its global bounds, fixes it, and solves the
/// remaining LP exactly. Returns an exactly feasible point or nullopt.
std::optional<Assignment> repairSolution(const Instance& instance,
                                         const Assignment& candidate);

/// Conical combination of the rows of `lp` with the Farkas row weights:
/// a globally valid constraint sum lambda_i a_i x >= sum lambda_i b_i whose
/// maximum activity over `local` is below its right-hand side. Throws
/// ProofError for sign-invalid or all-zero row weights.
LinearConstraint deriveDualProof(const Instance& lp, const LocalBounds& local,
                                 const FarkasProof& farkas);

}  // namespace exactmip

#endif  // EXACTMIP_BNB_HPP_
