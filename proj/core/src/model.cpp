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

#include "exactmip/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace exactmip {

const char* toString(Sense sense) {
  switch (sense) {
    case Sense::GreaterEqual:
      return ">=";
    case Sense::LessEqual:
      return "<=";
    case Sense::Equal:
      return "=";
  }
  return "?";
}

SparseVector canonicalize(SparseVector terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.value.isZero(); });
  return out;
}

namespace {

void checkIndices(const SparseVector& terms, int n, const std::string& what) {
  for (const auto& t : terms) {
    if (t.index < 0 || t.index >= n) {
      throw ModelError(what + " references variable index " +
                       std::to_string(t.index) + " but the instance has " +
                       std::to_string(n) + " variables");
    }
  }
}

}  // namespace

Instance Instance::build(std::vector<Variable> variables,
                         std::vector<LinearConstraint> constraints,
                         SparseVector objective, ObjectiveSense sense,
                         Rational objectiveOffset, std::string name) {
  Instance inst;
  inst.name_ = std::move(name);
  const int n = static_cast<int>(variables.size());

  for (int j = 0; j < n; ++j) {
    const auto& v = variables[j];
    if (v.name.empty()) {
      throw ModelError("variable " + std::to_string(j) + " has an empty name");
    }
    if (!inst.variableIndex_.emplace(v.name, j).second) {
      throw ModelError("duplicate variable name '" + v.name + "'");
    }
    if (v.lower.isPosInf()) {
      throw ModelError("variable '" + v.name + "' has lower bound +inf");
    }
    if (v.upper.isNegInf()) {
      throw ModelError("variable '" + v.name + "' has upper bound -inf");
    }
  }

  std::unordered_set<std::string> rowNames;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    auto& row = constraints[i];
    if (row.name.empty()) row.name = "c" + std::to_string(i);
    if (!rowNames.insert(row.name).second) {
      throw ModelError("duplicate constraint name '" + row.name + "'");
    }
    checkIndices(row.coefficients, n, "constraint '" + row.name + "'");
    row.coefficients = canonicalize(std::move(row.coefficients));
  }

  checkIndices(objective, n, "objective");
  inst.objective_ = canonicalize(std::move(objective));
  inst.minObjective_ = inst.objective_;
  if (sense == ObjectiveSense::Maximize) {
    for (auto& t : inst.minObjective_) t.value = -t.value;
  }
  inst.sense_ = sense;
  inst.offset_ = std::move(objectiveOffset);
  inst.variables_ = std::move(variables);
  inst.constraints_ = std::move(constraints);
  return inst;
}

ExtRational Instance::toReported(const ExtRational& internal) const {
  ExtRational value =
      sense_ == ObjectiveSense::Maximize ? -internal : internal;
  return value + ExtRational(offset_);
}

std::optional<int> Instance::findVariable(const std::string& name) const {
  auto it = variableIndex_.find(name);
  if (it == variableIndex_.end()) return std::nullopt;
  return it->second;
}

bool Instance::hasIntegralObjective() const {
  return std::all_of(objective_.begin(), objective_.end(), [&](const Term& t) {
    return t.value.isInteger() && variables_[t.index].integral;
  });
}

Rational activity(const SparseVector& row, const Assignment& point) {
  Rational sum;
  for (const auto& t : row) sum += t.value * point[t.index];
  return sum;
}

bool satisfies(const Rational& act, Sense sense, const Rational& rhs) {
  switch (sense) {
    case Sense::GreaterEqual:
      return act >= rhs;
    case Sense::LessEqual:
      return act <= rhs;
    case Sense::Equal:
      return act == rhs;
  }
  return false;
}

FeasibilityReport checkFeasible(const Instance& instance,
                                const Assignment& point) {
  if (static_cast<int>(point.size()) != instance.numVariables()) {
    throw ModelError("assignment has " + std::to_string(point.size()) +
                     " values, instance has " +
                     std::to_string(instance.numVariables()) + " variables");
  }
  FeasibilityReport report;
  for (int j = 0; j < instance.numVariables(); ++j) {
    const auto& v = instance.variable(j);
    const ExtRational x(point[j]);
    if (x < v.lower) report.bounds.push_back({j, BoundSide::Lower, point[j]});
    if (x > v.upper) report.bounds.push_back({j, BoundSide::Upper, point[j]});
    if (v.integral && !point[j].isInteger()) report.fractional.push_back(j);
  }
  for (int i = 0; i < instance.numConstraints(); ++i) {
    const auto& row = instance.constraint(i);
    Rational act = activity(row.coefficients, point);
    if (!satisfies(act, row.sense, row.rhs)) {
      report.rows.push_back({i, std::move(act)});
    }
  }
  return report;
}

Rational objectiveValue(const Instance& instance, const Assignment& point) {
  if (static_cast<int>(point.size()) != instance.numVariables()) {
    throw ModelError("assignment length does not match variable count");
  }
  return activity(instance.objective(), point) + instance.objectiveOffset();
}

Rational minObjectiveValue(const Instance& instance, const Assignment& point) {
  if (static_cast<int>(point.size()) != instance.numVariables()) {
    throw ModelError("assignment length does not match variable count");
  }
  return activity(instance.minObjective(), point);
}

}  // namespace exactmip
