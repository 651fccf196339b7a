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

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace exactmip;

namespace {

Variable var(std::string name, ExtRational lo, ExtRational hi, bool integral) {
  return {std::move(name), lo, hi, integral};
}

Instance knapsack() {
  return Instance::build(
      {var("x1", 0, 1, true), var("x2", 0, 1, true)},
      {{"c", {{0, 3}, {1, 2}}, Sense::LessEqual, 4}}, {{0, 5}, {1, 4}},
      ObjectiveSense::Maximize);
}

}  // namespace

TEST_CASE("build validates and canonicalizes") {
  Instance one = Instance::build({var("x", 0, 1, true)}, {}, {{0, 1}});
  CHECK(one.numVariables() == 1);
  CHECK(one.numConstraints() == 0);

  CHECK_THROWS_AS(Instance::build({var("x", 0, 1, false), var("y", 0, 1, false)},
                                  {{"c", {{5, 1}}, Sense::LessEqual, 1}}, {}),
                  ModelError);
  CHECK_THROWS_AS(Instance::build({var("x", 0, 1, false), var("x", 0, 1, false)},
                                  {}, {}),
                  ModelError);
  CHECK_THROWS_AS(
      Instance::build({var("x", ExtRational::posInf(), 1, false)}, {}, {}),
      ModelError);

  Instance zero = Instance::build(
      {var("x", 0, 1, false), var("y", 0, 1, false)},
      {{"c", {{1, 2}, {0, 0}, {1, 1}}, Sense::LessEqual, 1}}, {});
  REQUIRE(zero.constraint(0).coefficients.size() == 1);
  CHECK(zero.constraint(0).coefficients[0] == Term{1, 3});
}

TEST_CASE("canonicalize sums, drops and sorts") {
  SparseVector v = canonicalize({{3, 1}, {1, 2}, {3, -1}, {0, Rational(1, 2)}});
  CHECK(v == SparseVector{{0, Rational(1, 2)}, {1, 2}});
}

TEST_CASE("feasibility check is exact") {
  Instance box = Instance::build({var("x", 1, 3, true)}, {}, {{0, 1}});
  CHECK(checkFeasible(box, {Rational(1)}).feasible());
  CHECK(checkFeasible(box, {Rational(0)}).bounds.size() == 1);

  Instance frac = Instance::build({var("x", 0, 1, true)}, {}, {{0, 1}});
  FeasibilityReport r = checkFeasible(frac, {Rational(1, 2)});
  CHECK(r.fractional == std::vector<int>{0});

  Instance k = knapsack();
  FeasibilityReport bad = checkFeasible(k, {Rational(1), Rational(1)});
  REQUIRE(bad.rows.size() == 1);
  CHECK(bad.rows[0].activity == Rational(5));
  int infeasible = 0;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      if (!checkFeasible(k, {Rational(a), Rational(b)}).feasible()) ++infeasible;
    }
  }
  CHECK(infeasible == 1);

  CHECK_THROWS_AS(checkFeasible(k, {Rational(1)}), ModelError);
}

TEST_CASE("objective values in both senses") {
  Instance frac = Instance::build({var("x", 0, 1, true)}, {}, {{0, 1}});
  CHECK(objectiveValue(frac, {Rational(1, 2)}) == Rational(1, 2));
  Instance empty = Instance::build({var("x", 0, 1, true)}, {}, {});
  CHECK(objectiveValue(empty, {Rational(1)}) == Rational(0));

  Instance k = knapsack();
  CHECK(objectiveValue(k, {Rational(1), Rational(0)}) == Rational(5));
  CHECK(minObjectiveValue(k, {Rational(1), Rational(0)}) == Rational(-5));
  CHECK(k.toReported(ExtRational(Rational(-5))) == ExtRational(Rational(5)));

  Instance shifted = Instance::build({var("x", 0, 1, true)}, {}, {{0, 2}},
                                     ObjectiveSense::Maximize, Rational(3));
  CHECK(objectiveValue(shifted, {Rational(1)}) == Rational(5));
  CHECK(shifted.toReported(ExtRational(Rational(-2))) ==
        ExtRational(Rational(5)));
  CHECK(shifted.toReported(ExtRational::negInf()).isPosInf());
}

TEST_CASE("integral objective detection") {
  CHECK(knapsack().hasIntegralObjective());
  Instance cont = Instance::build({var("x", 0, 1, false)}, {}, {{0, 1}});
  CHECK_FALSE(cont.hasIntegralObjective());
  Instance half = Instance::build({var("x", 0, 1, true)}, {}, {{0, Rational(1, 2)}});
  CHECK_FALSE(half.hasIntegralObjective());
}

TEST_CASE("checkFeasible agrees with the oracle on random points") {
  gen::Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    Instance inst = gen::randomMilp(rng);
    oracle::Problem p = oracle::fromInstance(inst);
    Assignment x;
    oracle::Point fx;
    for (int j = 0; j < inst.numVariables(); ++j) {
      Rational v(Integer(gen::uniform(rng, -12, 12)), Integer(gen::uniform(rng, 1, 2)));
      x.push_back(v);
      fx.push_back(oracle::toFrac(v));
    }
    CHECK(checkFeasible(inst, x).feasible() == oracle::feasible(p, fx, true));
  }
}
