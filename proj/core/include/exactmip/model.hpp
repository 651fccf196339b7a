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

#ifndef EXACTMIP_MODEL_HPP_
#define EXACTMIP_MODEL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exactmip/rational.hpp"

namespace exactmip {

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sense { GreaterEqual, LessEqual, Equal };
enum class ObjectiveSense { Minimize, Maximize };
enum class BoundSide { Lower, Upper };

const char* toString(Sense sense);

struct Term {
  int index = 0;
  Rational value;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no duplicate indices, no zero values.
using SparseVector = std::vector<Term>;

/// Sums duplicates, drops zeros and sorts by index.
SparseVector canonicalize(SparseVector terms);

struct Variable {
  std::string name;
  ExtRational lower = Rational(0);
  ExtRational upper = ExtRational::posInf();
  bool integral = false;
};

struct LinearConstraint {
  std::string name;
  SparseVector coefficients;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

using Assignment = std::vector<Rational>;

/// min c^T x + offset  s.t.  rows, l <= x <= u, x_i integral for i in I.
///
/// The objective is stored exactly as given together with its original
/// sense; minObjective() is the internal minimization form that every
/// algorithm works with.
class Instance {
 public:
  Instance() = default;

  /// Validates names, indices and bounds; canonicalizes sparse rows.
  /// Throws ModelError on duplicate variable or constraint names,
  /// out-of-range indices, lower = +inf or upper = -inf.
  static Instance build(std::vector<Variable> variables,
                        std::vector<LinearConstraint> constraints,
                        SparseVector objective,
                        ObjectiveSense sense = ObjectiveSense::Minimize,
                        Rational objectiveOffset = Rational(0),
                        std::string name = {});

  const std::string& name() const { return name_; }
  int numVariables() const { return static_cast<int>(variables_.size()); }
  int numConstraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(int j) const { return variables_.at(j); }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const LinearConstraint& constraint(int i) const { return constraints_.at(i); }

  ObjectiveSense objectiveSense() const { return sense_; }
  /// Objective as read, in the original sense.
  const SparseVector& objective() const { return objective_; }
  const Rational& objectiveOffset() const { return offset_; }
  /// Objective in minimization form (negated for maximization), without the
  /// constant offset.
  const SparseVector& minObjective() const { return minObjective_; }

  /// Maps an internal minimization value of c^T x (no offset) to the value
  /// reported to the user: sign restored and offset added.
  ExtRational toReported(const ExtRational& internal) const;

  std::optional<int> findVariable(const std::string& name) const;

  /// True when every variable with a nonzero objective coefficient is
  /// integral and every objective coefficient is an integer.
  bool hasIntegralObjective() const;

 private:
  std::string name_;
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  SparseVector objective_;
  SparseVector minObjective_;
  ObjectiveSense sense_ = ObjectiveSense::Minimize;
  Rational offset_;
  std::unordered_map<std::string, int> variableIndex_;
};

/// Activity a^T x of a sparse row.
Rational activity(const SparseVector& row, const Assignment& point);

/// Whether value satisfies "activity sense rhs".
bool satisfies(const Rational& activity, Sense sense, const Rational& rhs);

struct BoundViolation {
  int variable = 0;
  BoundSide side = BoundSide::Lower;
  Rational value;
};

struct RowViolation {
  int constraint = 0;
  Rational activity;
};

struct FeasibilityReport {
  std::vector<BoundViolation> bounds;
  std::vector<RowViolation> rows;
  std::vector<int> fractional;

  bool feasible() const {
    return bounds.empty() && rows.empty() && fractional.empty();
  }
};

/// Exact check with zero tolerance. Throws ModelError on length mismatch.
FeasibilityReport checkFeasible(const Instance& instance,
                                const Assignment& point);

/// c^T x + offset in the instance's original objective sense.
Rational objectiveValue(const Instance& instance, const Assignment& point);

/// Internal minimization objective c^T x without offset.
Rational minObjectiveValue(const Instance& instance, const Assignment& point);

}  // namespace exactmip

#endif  // EXACTMIP_MODEL_HPP_
