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

#ifndef EXACTMIP_TESTS_COMPARE_HPP_
#define EXACTMIP_TESTS_COMPARE_HPP_

#include <optional>
#include <string>

#include "exactmip/model.hpp"

namespace support {

/// First difference between two instances, ignoring names when
/// `compareNames` is false; nullopt when they agree.
inline std::optional<std::string> instanceDifference(
    const exactmip::Instance& a, const exactmip::Instance& b,
    bool compareNames = true) {
  if (a.numVariables() != b.numVariables()) return "variable count";
  if (a.numConstraints() != b.numConstraints()) return "constraint count";
  for (int j = 0; j < a.numVariables(); ++j) {
    const auto& u = a.variable(j);
    const auto& v = b.variable(j);
    std::string where = "variable " + std::to_string(j);
    if (compareNames && u.name != v.name) return where + " name";
    if (u.lower != v.lower) return where + " lower bound";
    if (u.upper != v.upper) return where + " upper bound";
    if (u.integral != v.integral) return where + " integrality";
  }
  for (int i = 0; i < a.numConstraints(); ++i) {
    const auto& c = a.constraint(i);
    const auto& d = b.constraint(i);
    std::string where = "constraint " + std::to_string(i);
    if (compareNames && c.name != d.name) return where + " name";
    if (c.coefficients != d.coefficients) return where + " coefficients";
    if (c.sense != d.sense) return where + " sense";
    if (c.rhs != d.rhs) return where + " rhs";
  }
  if (a.objective() != b.objective()) return "objective";
  if (a.objectiveSense() != b.objectiveSense()) return "objective sense";
  if (a.objectiveOffset() != b.objectiveOffset()) return "objective offset";
  return std::nullopt;
}

}  // namespace support

#endif  // EXACTMIP_TESTS_COMPARE_HPP_
