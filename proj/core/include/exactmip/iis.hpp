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

#ifndef EXACTMIP_IIS_HPP_
#define EXACTMIP_IIS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactmip/model.hpp"

namespace exactmip {

class IISError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IISMethod { Deletion, Additive };

const char* toString(IISMethod method);
IISMethod parseIISMethod(const std::string& text);

enum class Feasibility { Feasible, Infeasible, Unknown };

struct IISOptions {
  /// When false only constraints are candidates and every bound stays.
  bool includeBounds = true;
  bool irreducible = true;
  /// Node limit of each feasibility solve.
  long nodeLimit = 10000;
};

/// One removable piece of the model: a row, or a finite bound.
struct IISElement {
  enum class Kind { Constraint, Bound };
  Kind kind = Kind::Constraint;
  int index = 0;
  BoundSide side = BoundSide::Lower;

  friend bool operator==(const IISElement&, const IISElement&) = default;
};

struct IISResult {
  std::vector<int> constraintIndices;
  std::vector<std::pair<int, BoundSide>> boundIndices;
  /// Bounds were not candidates, so all of them belong to the subsystem.
  bool allBounds = false;
  bool irreducible = false;
  IISMethod method = IISMethod::Deletion;
  /// Includes the initial check of the full instance.
  long oracleCalls = 0;
};

/// Rows in file order, then finite bounds by variable, lower before upper.
std::vector<IISElement> iisElements(const Instance& instance,
                                    bool includeBounds);

/// The instance restricted to `active` elements, with a zero objective.
/// Bounds that are not elements are kept when `includeBounds` is false.
Instance subsystem(const Instance& instance,
                   const std::vector<IISElement>& active, bool includeBounds);

/// The subsystem a result describes, keeping the original objective.
Instance subsystem(const Instance& instance, const IISResult& result);

/// Exact branch-and-bound feasibility check with a node limit.
Feasibility checkFeasibility(const Instance& instance, long nodeLimit);

/// Throws IISError("instance is feasible") for a feasible instance, or if
/// the oracle cannot decide the full instance.
IISResult deletionFilter(const Instance& instance, const IISOptions& opts = {});
IISResult additiveMethod(const Instance& instance, const IISOptions& opts = {});

}  // namespace exactmip

#endif  // EXACTMIP_IIS_HPP_
