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

#ifndef EXACTMIP_TESTS_GENERATORS_HPP_
#define EXACTMIP_TESTS_GENERATORS_HPP_

#include <random>

#include "exactmip/model.hpp"

namespace gen {

using Rng = std::mt19937_64;

struct MilpOptions {
  int maxVars = 6;
  int maxRows = 6;
  int maxContinuous = 2;
  int boundRange = 5;
  int maxNumerator = 5;
  int maxDenominator = 4;
  /// Chance that a row's right-hand side is taken from a planted point.
  double plantedRhs = 0.75;
  double continuousChance = 0.3;
};

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

/// Nonzero p/q with |p| <= maxNumerator, 1 <= q <= maxDenominator.
exactmip::Rational randomCoefficient(Rng& rng, int maxNumerator,
                                     int maxDenominator);

/// Small bounded MILP: integer bounds in [-boundRange, boundRange], rows of
/// each sense, either objective sense.
exactmip::Instance randomMilp(Rng& rng, const MilpOptions& opts = {});

/// Bounded LP with only continuous columns.
exactmip::Instance randomLp(Rng& rng, int maxVars = 4, int maxRows = 4);

/// Pure-integer instance whose only infeasible subsystem is the row pair
/// (first, second): a x >= b and a x <= b - 1. The other rows hold on the
/// whole box.
struct PlantedConflict {
  exactmip::Instance instance;
  int first = -1;
  int second = -1;
};
PlantedConflict plantedConflict(Rng& rng);

}  // namespace gen

#endif  // EXACTMIP_TESTS_GENERATORS_HPP_
