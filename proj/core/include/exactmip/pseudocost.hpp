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

#ifndef EXACTMIP_PSEUDOCOST_HPP_
#define EXACTMIP_PSEUDOCOST_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactmip/model.hpp"

namespace exactmip {

enum class BranchDir { Down, Up };
enum class BranchingRule { Aps, Pscost, FirstFrac };

const char* toString(BranchingRule rule);
/// "aps", "pscost" or "firstfrac"; throws std::invalid_argument otherwise.
BranchingRule parseBranchingRule(const std::string& text);

class BranchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Default discount factor of the ancestral pseudocost.
inline Rational defaultDiscount() { return Rational(1, 5); }

/// Per-unit bound gains, per variable and direction, at level 0 (the
/// branching's own child) and level 1 (one level further down).
class PseudocostStore {
 public:
  PseudocostStore() = default;
  PseudocostStore(int numVariables, Rational gamma = defaultDiscount(),
                  int reliabilityThreshold = 1);

  int numVariables() const { return static_cast<int>(entries_.size()); }
  const Rational& gamma() const { return gamma_; }
  int reliabilityThreshold() const { return reliability_; }

  void addRecord(int level, int variable, BranchDir dir, const Rational& value);
  int count(int level, int variable, BranchDir dir) const;
  const Rational& sum(int level, int variable, BranchDir dir) const;
  std::optional<Rational> average(int level, int variable, BranchDir dir) const;

  /// Average of the variable, else the mean of all known averages of that
  /// level and direction, else 1.
  Rational estimate(int level, int variable, BranchDir dir) const;

 private:
  struct Cell {
    Rational sum;
    int count = 0;
  };
  struct Entry {
    Cell cells[2][2];  // [level][dir]
  };
  const Cell& cell(int level, int variable, BranchDir dir) const;

  std::vector<Entry> entries_;
  Rational gamma_ = defaultDiscount();
  int reliability_ = 1;
};

struct BranchCandidate {
  int variable = 0;
  Rational value;  // fractional LP value
};

/// Integral variables with a non-integer value, by index.
std::vector<BranchCandidate> fractionalCandidates(const Instance& instance,
                                                  const Assignment& point);

/// Picks the branching variable among `candidates`.
///   Aps: argmax of (f * APS_down) * ((1 - f) * APS_up) with
///        APS = PS_0 + gamma * PS_1; if any candidate has fewer than the
///        reliability threshold records at either level in either
///        direction, PS_0 alone is used at this call.
///   Pscost: the same product over PS_0 alone.
///   FirstFrac: the fractional variable with the lowest index.
/// Ties go to the lowest variable index. Throws BranchingError when empty.
int selectBranchVar(const std::vector<BranchCandidate>& candidates,
                    const PseudocostStore& store, BranchingRule rule);

/// One branching decision: `variable` with fractional part `fraction` at a
/// node whose LP bound was `parentBound`, followed into direction `dir`.
struct BranchStep {
  int variable = 0;
  BranchDir dir = BranchDir::Down;
  Rational fraction;
  Rational parentBound;
};

/// Distance to the branching bound: f downwards, 1 - f upwards.
Rational branchDistance(const BranchStep& step);

/// Records the gain observed at a child with LP bound `childBound`:
/// PS_0(step.variable) gains (childBound - parentBound) / distance, and,
/// when the parent itself was created by `previous`, PS_1(previous.variable)
/// gains the same difference over its own distance. Throws BranchingError
/// for a fractional part outside (0, 1).
void updatePseudocosts(PseudocostStore& store, const BranchStep& step,
                       const std::optional<BranchStep>& previous,
                       const Rational& childBound);

}  // namespace exactmip

#endif  // EXACTMIP_PSEUDOCOST_HPP_
