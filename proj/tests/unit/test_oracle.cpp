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

// The oracles other tests rely on, checked on hand-solved cases.

#include "oracle.hpp"

#include "fraction.hpp"
#include "helpers.hpp"

using namespace exactmip;
using oracle::Frac;

TEST_CASE("fractions normalize and detect overflow") {
  CHECK(Frac(2, -4) == Frac(-1, 2));
  CHECK(Frac(6, 3).isInteger());
  CHECK(Frac(-3, 4).str() == "-3/4");
  Frac big(static_cast<oracle::i128>(1) << 100, 1);
  CHECK_THROWS_AS(big * big, oracle::OverflowError);
}

TEST_CASE("vertex enumeration solves small LPs") {
  oracle::Problem p = oracle::fromInstance(lpText(
      "Minimize obj: -x - y Subject To c: x + 2 y <= 4\n d: 3 x + y <= 6\n"
      "Bounds\n x <= 10\n y <= 10\nEnd"));
  oracle::Outcome o = oracle::solveLp(p);
  REQUIRE(o.feasible);
  CHECK(o.value == Frac(-14, 5));
  CHECK(oracle::vertices(p.rows, p.lo, p.hi).size() == 4);
}

TEST_CASE("lattice enumeration solves small MILPs") {
  oracle::Problem p = oracle::fromInstance(lpText(
      "Maximize obj: 5 x1 + 4 x2 Subject To c: 3 x1 + 2 x2 <= 4\n"
      "Binary\n x1 x2\nEnd"));
  oracle::Outcome o = oracle::solveMilp(p);
  REQUIRE(o.feasible);
  CHECK(o.value == Frac(-5));
  CHECK(oracle::latticeSize(p) == 4);

  oracle::Problem mixed = oracle::fromInstance(lpText(
      "Minimize obj: y Subject To c: y - x >= 1/2\n d: y + x >= 3/2\n"
      "Bounds\n x <= 3\n y <= 5\nGeneral\n x\nEnd"));
  oracle::Outcome m = oracle::solveMilp(mixed);
  REQUIRE(m.feasible);
  CHECK(m.value == Frac(3, 2));

  oracle::Problem none = oracle::fromInstance(corpusInstance("integer_infeasible.lp"));
  CHECK_FALSE(oracle::solveMilp(none).feasible);
  CHECK(oracle::solveLp(none).feasible);
}
