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

#include "exactmip/pseudocost.hpp"

namespace exactmip {

const char* toString(BranchingRule rule) {
  switch (rule) {
    case BranchingRule::Aps:
      return "aps";
    case BranchingRule::Pscost:
      return "pscost";
    case BranchingRule::FirstFrac:
      return "firstfrac";
  }
  return "?";
}

BranchingRule parseBranchingRule(const std::string& text) {
  if (text == "aps") return BranchingRule::Aps;
  if (text == "pscost") return BranchingRule::Pscost;
  if (text == "firstfrac") return BranchingRule::FirstFrac;
  throw std::invalid_argument("unknown branching rule '" + text + "'");
}

PseudocostStore::PseudocostStore(int numVariables, Rational gamma,
                                 int reliabilityThreshold)
    : entries_(numVariables),
      gamma_(std::move(gamma)),
      reliability_(reliabilityThreshold) {
  if (gamma_.sign() < 0 || gamma_ > Rational(1)) {
    throw BranchingError("discount factor must lie in [0, 1]");
  }
  if (reliability_ < 0) {
    throw BranchingError("reliability threshold must be nonnegative");
  }
}

const PseudocostStore::Cell& PseudocostStore::cell(int level, int variable,
                                                   BranchDir dir) const {
  if (level < 0 || level > 1) throw BranchingError("level must be 0 or 1");
  return entries_.at(variable).cells[level][dir == BranchDir::Up ? 1 : 0];
}

void PseudocostStore::addRecord(int level, int variable, BranchDir dir,
                                const Rational& value) {
  cell(level, variable, dir);  // validates the level
  Cell& c = entries_.at(variable).cells[level][dir == BranchDir::Up ? 1 : 0];
  c.sum += value;
  ++c.count;
}

int PseudocostStore::count(int level, int variable, BranchDir dir) const {
  return cell(level, variable, dir).count;
}

const Rational& PseudocostStore::sum(int level, int variable,
                                     BranchDir dir) const {
  return cell(level, variable, dir).sum;
}

std::optional<Rational> PseudocostStore::average(int level, int variable,
                                                 BranchDir dir) const {
  const Cell& c = cell(level, variable, dir);
  if (c.count == 0) return std::nullopt;
  return c.sum / Rational(c.count);
}

Rational PseudocostStore::estimate(int level, int variable,
                                   BranchDir dir) const {
  if (auto a = average(level, variable, dir)) return *a;
  Rational total;
  int known = 0;
  for (int j = 0; j < numVariables(); ++j) {
    if (auto a = average(level, j, dir)) {
      total += *a;
      ++known;
    }
  }
  if (known == 0) return Rational(1);
  return total / Rational(known);
}

std::vector<BranchCandidate> fractionalCandidates(const Instance& instance,
                                                  const Assignment& point) {
  std::vector<BranchCandidate> out;
  for (int j = 0; j < instance.numVariables(); ++j) {
    if (instance.variable(j).integral && !point.at(j).isInteger()) {
      out.push_back({j, point[j]});
    }
  }
  return out;
}

int selectBranchVar(const std::vector<BranchCandidate>& candidates,
                    const PseudocostStore& store, BranchingRule rule) {
  if (candidates.empty()) throw BranchingError("no fractional candidate");
  if (rule == BranchingRule::FirstFrac) {
    int best = candidates.front().variable;
    for (const auto& c : candidates) best = std::min(best, c.variable);
    return best;
  }
  bool ancestral = rule == BranchingRule::Aps && !store.gamma().isZero();
  if (ancestral) {
    const int threshold = store.reliabilityThreshold();
    for (const auto& c : candidates) {
      for (int level = 0; level < 2; ++level) {
        for (BranchDir d : {BranchDir::Down, BranchDir::Up}) {
          if (store.count(level, c.variable, d) < threshold) ancestral = false;
        }
      }
    }
  }
  auto gain = [&](int j, BranchDir d) {
    Rational g = store.estimate(0, j, d);
    if (ancestral) g += store.gamma() * store.estimate(1, j, d);
    return g;
  };

  int best = -1;
  Rational bestScore;
  for (const auto& c : candidates) {
    Rational f = c.value.fractionalPart();
    Rational score = (gain(c.variable, BranchDir::Down) * f) *
                     (gain(c.variable, BranchDir::Up) * (Rational(1) - f));
    if (best < 0 || score > bestScore ||
        (score == bestScore && c.variable < best)) {
      best = c.variable;
      bestScore = score;
    }
  }
  return best;
}

Rational branchDistance(const BranchStep& step) {
  if (step.fraction.sign() <= 0 || step.fraction >= Rational(1)) {
    throw BranchingError("fractional part " + step.fraction.str() +
                         " is outside (0, 1)");
  }
  return step.dir == BranchDir::Down ? step.fraction
                                     : Rational(1) - step.fraction;
}

void updatePseudocosts(PseudocostStore& store, const BranchStep& step,
                       const std::optional<BranchStep>& previous,
                       const Rational& childBound) {
  Rational gainValue = childBound - step.parentBound;
  Rational own = branchDistance(step);
  std::optional<Rational> ancestor;
  if (previous) ancestor = branchDistance(*previous);
  store.addRecord(0, step.variable, step.dir, gainValue / own);
  if (previous) {
    store.addRecord(1, previous->variable, previous->dir, gainValue / *ancestor);
  }
}

}  // namespace exactmip
