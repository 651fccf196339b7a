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

#include "exactmip/iis.hpp"

#include <algorithm>

#include "exactmip/bnb.hpp"

namespace exactmip {

const char* toString(IISMethod method) {
  return method == IISMethod::Deletion ? "deletion" : "additive";
}

IISMethod parseIISMethod(const std::string& text) {
  if (text == "deletion") return IISMethod::Deletion;
  if (text == "additive") return IISMethod::Additive;
  throw std::invalid_argument("unknown IIS method '" + text + "'");
}

std::vector<IISElement> iisElements(const Instance& instance,
                                    bool includeBounds) {
  std::vector<IISElement> out;
  for (int i = 0; i < instance.numConstraints(); ++i) {
    out.push_back({IISElement::Kind::Constraint, i, BoundSide::Lower});
  }
  if (!includeBounds) return out;
  for (int j = 0; j < instance.numVariables(); ++j) {
    const Variable& v = instance.variable(j);
    if (v.lower.isFinite()) {
      out.push_back({IISElement::Kind::Bound, j, BoundSide::Lower});
    }
    if (v.upper.isFinite()) {
      out.push_back({IISElement::Kind::Bound, j, BoundSide::Upper});
    }
  }
  return out;
}

namespace {

Instance restrict(const Instance& instance,
                  const std::vector<IISElement>& active, bool includeBounds,
                  SparseVector objective) {
  std::vector<Variable> vars = instance.variables();
  if (includeBounds) {
    for (auto& v : vars) {
      v.lower = ExtRational::negInf();
      v.upper = ExtRational::posInf();
    }
  }
  std::vector<LinearConstraint> rows;
  for (const auto& e : active) {
    if (e.kind == IISElement::Kind::Constraint) {
      rows.push_back(instance.constraint(e.index));
    } else if (e.side == BoundSide::Lower) {
      vars[e.index].lower = instance.variable(e.index).lower;
    } else {
      vars[e.index].upper = instance.variable(e.index).upper;
    }
  }
  return Instance::build(std::move(vars), std::move(rows),
                         std::move(objective), instance.objectiveSense(),
                         instance.objectiveOffset(), instance.name());
}

class Oracle {
 public:
  Oracle(const Instance& instance, const IISOptions& opts)
      : instance_(instance), opts_(opts) {}

  Feasibility operator()(const std::vector<IISElement>& active) {
    ++calls;
    Instance sub = subsystem(instance_, active, opts_.includeBounds);
    Feasibility f = checkFeasibility(sub, opts_.nodeLimit);
    if (f == Feasibility::Unknown) undecided = true;
    return f;
  }

  long calls = 0;
  bool undecided = false;

 private:
  const Instance& instance_;
  const IISOptions& opts_;
};

std::vector<IISElement> without(const std::vector<IISElement>& set,
                                std::size_t skip) {
  std::vector<IISElement> out;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k != skip) out.push_back(set[k]);
  }
  return out;
}

// Removes every element whose removal keeps the set infeasible.
std::vector<IISElement> deletionPass(std::vector<IISElement> set,
                                     Oracle& oracle) {
  std::size_t k = 0;
  while (k < set.size()) {
    auto rest = without(set, k);
    if (oracle(rest) == Feasibility::Infeasible) {
      set = std::move(rest);
    } else {
      ++k;
    }
  }
  return set;
}

bool singleRemovalsFeasible(const std::vector<IISElement>& set,
                            Oracle& oracle) {
  bool all = true;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (oracle(without(set, k)) != Feasibility::Feasible) all = false;
  }
  return all;
}

void checkInfeasible(const std::vector<IISElement>& all, Oracle& oracle) {
  switch (oracle(all)) {
    case Feasibility::Feasible:
      throw IISError("instance is feasible");
    case Feasibility::Unknown:
      throw IISError("feasibility of the instance is undecided");
    case Feasibility::Infeasible:
      break;
  }
}

IISResult toResult(const std::vector<IISElement>& set, IISMethod method,
                   const IISOptions& opts, const Oracle& oracle,
                   bool irreducible) {
  IISResult r;
  for (const auto& e : set) {
    if (e.kind == IISElement::Kind::Constraint) {
      r.constraintIndices.push_back(e.index);
    } else {
      r.boundIndices.push_back({e.index, e.side});
    }
  }
  r.allBounds = !opts.includeBounds;
  r.method = method;
  r.irreducible = irreducible && !oracle.undecided;
  r.oracleCalls = oracle.calls;
  return r;
}

}  // namespace

Instance subsystem(const Instance& instance,
                   const std::vector<IISElement>& active, bool includeBounds) {
  return restrict(instance, active, includeBounds, {});
}

Instance subsystem(const Instance& instance, const IISResult& result) {
  std::vector<IISElement> active;
  for (int i : result.constraintIndices) {
    active.push_back({IISElement::Kind::Constraint, i, BoundSide::Lower});
  }
  for (const auto& [j, side] : result.boundIndices) {
    active.push_back({IISElement::Kind::Bound, j, side});
  }
  return restrict(instance, active, !result.allBounds, instance.objective());
}

Feasibility checkFeasibility(const Instance& instance, long nodeLimit) {
  Instance zero = Instance::build(instance.variables(), instance.constraints(),
                                  {}, ObjectiveSense::Minimize, Rational(0),
                                  instance.name());
  SolveParams params;
  params.nodeLimit = nodeLimit;
  SolveResult r = solve(zero, params);
  switch (r.status) {
    case SolveStatus::Optimal:
    case SolveStatus::Unbounded:
      return Feasibility::Feasible;
    case SolveStatus::Infeasible:
      return Feasibility::Infeasible;
    case SolveStatus::LimitReached:
      break;
  }
  return Feasibility::Unknown;
}

IISResult deletionFilter(const Instance& instance, const IISOptions& opts) {
  Oracle oracle(instance, opts);
  std::vector<IISElement> set = iisElements(instance, opts.includeBounds);
  checkInfeasible(set, oracle);
  set = deletionPass(std::move(set), oracle);
  bool irreducible = opts.irreducible && singleRemovalsFeasible(set, oracle);
  return toResult(set, IISMethod::Deletion, opts, oracle, irreducible);
}

IISResult additiveMethod(const Instance& instance, const IISOptions& opts) {
  Oracle oracle(instance, opts);
  const std::vector<IISElement> all = iisElements(instance, opts.includeBounds);
  checkInfeasible(all, oracle);

  auto contains = [](const std::vector<IISElement>& set,
                     const IISElement& e) {
    return std::find(set.begin(), set.end(), e) != set.end();
  };
  std::vector<IISElement> core;
  while (true) {
    std::vector<IISElement> candidate = core;
    std::optional<IISElement> trigger;
    for (const auto& e : all) {
      if (contains(core, e)) continue;
      candidate.push_back(e);
      bool infeasible = candidate.size() == all.size() ||
                        oracle(candidate) == Feasibility::Infeasible;
      if (infeasible) {
        trigger = e;
        break;
      }
    }
    if (!trigger) {
      core = all;
      break;
    }
    bool firstAddition = candidate.size() == core.size() + 1;
    core.push_back(*trigger);
    if (firstAddition) break;
    if (oracle(core) == Feasibility::Infeasible) break;
  }
  std::vector<IISElement> ordered;
  for (const auto& e : all) {
    if (contains(core, e)) ordered.push_back(e);
  }
  bool irreducible = false;
  if (opts.irreducible) {
    ordered = deletionPass(std::move(ordered), oracle);
    irreducible = singleRemovalsFeasible(ordered, oracle);
  }
  return toResult(ordered, IISMethod::Additive, opts, oracle, irreducible);
}

}  // namespace exactmip
