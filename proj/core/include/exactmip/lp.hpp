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

#ifndef EXACTMIP_LP_HPP_
#define EXACTMIP_LP_HPP_

#include <stdexcept>
#include <vector>

#include "exactmip/model.hpp"

namespace exactmip {

struct Domain {
  ExtRational lower;
  ExtRational upper;

  friend bool operator==(const Domain&, const Domain&) = default;
};

/// Node-local variable domains, one per variable.
using LocalBounds = std::vector<Domain>;

LocalBounds globalBounds(const Instance& instance);

enum class LPStatus { Optimal, Infeasible, Unbounded };

const char* toString(LPStatus status);

/// A column of the LP: a structural variable or the activity a_i^T x of
/// row i.
struct ColumnRef {
  enum class Kind { Structural, Slack };
  Kind kind = Kind::Structural;
  int index = 0;

  static ColumnRef structural(int j) { return {Kind::Structural, j}; }
  static ColumnRef slack(int i) { return {Kind::Slack, i}; }
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

/// Multipliers for the system written in >= form: row i as a_i x >= b_i
/// (>= rows), -a_i x >= -b_i (<= rows), a_i x >= b_i with a free sign
/// (= rows); lower[j] weights x_j >= l_j and upper[j] weights -x_j >= -u_j.
/// rows, lower and upper are nonnegative except rows on = constraints.
/// The aggregate has all-zero coefficients and a positive right-hand side.
struct FarkasProof {
  std::vector<Rational> rows;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  /// Optimal point, or a feasible point when Unbounded.
  Assignment primal;
  /// Improving direction when Unbounded.
  Assignment ray;
  /// y with y_i >= 0 on >= rows, y_i <= 0 on <= rows (Optimal only).
  std::vector<Rational> duals;
  /// c - A^T y (Optimal only).
  std::vector<Rational> reducedCosts;
  /// Basic column per row (Optimal only).
  std::vector<ColumnRef> basis;
  FarkasProof farkas;  // Infeasible only
  /// c^T x at the optimum; +inf when Infeasible, -inf when Unbounded.
  ExtRational objective;
  long iterations = 0;
};

/// Exact bounded-variable two-phase primal simplex with Bland's rule on the
/// minimization objective of the instance.
LPResult solveLP(const Instance& instance, const LocalBounds& local);

/// Same, minimizing `objective` instead of the instance objective.
LPResult solveLP(const Instance& instance, const LocalBounds& local,
                 const SparseVector& objective);

class LPError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// x_basic + sum structural_j x_j + sum slack_i s_i = rhs, where s_i is the
/// nonnegative textbook slack of row i (b_i - a_i x for <= rows,
/// a_i x - b_i for >= rows). Only nonbasic columns appear; equality-row
/// slacks are fixed and folded into rhs.
struct TableauRow {
  ColumnRef basicVar;
  SparseVector structural;
  SparseVector slack;  // indexed by row
  Rational rhs;
};

/// Recomputes the tableau row of a basic column from the basis by exact
/// elimination. Throws LPError if the result is not Optimal or the column
/// is not basic.
TableauRow tableauRow(const LPResult& result, const Instance& instance,
                      ColumnRef basicVar);

/// y^T b + sum_j min over [l_j, u_j] of (c - A^T y)_j x_j after clamping
/// dual signs to the row senses. A valid lower bound on the LP value;
/// -inf when an unbounded domain meets a nonzero reduced cost.
ExtRational safeDualBound(const Instance& instance, const LocalBounds& local,
                          const std::vector<Rational>& candidateDuals);

/// Variant against an explicit objective.
ExtRational safeDualBound(const Instance& instance, const LocalBounds& local,
                          const std::vector<Rational>& candidateDuals,
                          const SparseVector& objective);

}  // namespace exactmip

#endif  // EXACTMIP_LP_HPP_
