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

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace exactmip;

namespace {

constexpr IISMethod kMethods[] = {IISMethod::Deletion, IISMethod::Additive};

IISResult run(IISMethod m, const Instance& inst, const IISOptions& o = {}) {
  return m == IISMethod::Deletion ? deletionFilter(inst, o) : additiveMethod(inst, o);
}

bool infeasible(const Instance& inst) {
  return !oracle::solveMilp(oracle::fromInstance(inst)).feasible;
}

}  // namespace

TEST_CASE("the two contradicting rows") {
  Instance inst = corpusInstance("infeas.lp");
  for (IISMethod m : kMethods) {
    CAPTURE(toString(m));
    IISResult r = run(m, inst);
    CHECK(r.constraintIndices == std::vector<int>{0, 1});
    CHECK(r.boundIndices.empty());
    CHECK(r.irreducible);
    CHECK((r.method == m));
  }
  IISResult d = deletionFilter(inst);
  // Initial check, one call per element, one per kept element.
  CHECK(d.oracleCalls == 1 + 7 + 2);
}

TEST_CASE("feasible instances raise") {
  Instance inst = corpusInstance("feasible.mps");
  for (IISMethod m : kMethods) CHECK_THROWS_AS(run(m, inst), IISError);
}

TEST_CASE("bounds can be part of the subsystem") {
  Instance inst = lpText(
      "Minimize obj: x Subject To c: x + y >= 3\nBounds\n x <= 1\n y <= 1\nEnd");
  for (IISMethod m : kMethods) {
    IISResult r = run(m, inst);
    CHECK(r.constraintIndices == std::vector<int>{0});
    CHECK(r.boundIndices == std::vector<std::pair<int, BoundSide>>{
                                {0, BoundSide::Upper}, {1, BoundSide::Upper}});
    CHECK_FALSE(r.allBounds);
  }
}

TEST_CASE("bounds excluded stay as context") {
  Instance inst = lpText(
      "Minimize obj: x Subject To p: x + y >= 3\n q: x + y <= 1\n"
      "Bounds\n y <= 0\nEnd");
  IISOptions o;
  o.includeBounds = false;
  for (IISMethod m : kMethods) {
    IISResult r = run(m, inst, o);
    CHECK(r.constraintIndices == std::vector<int>{0, 1});
    CHECK(r.boundIndices.empty());
    CHECK(r.allBounds);
    Instance sub = subsystem(inst, r);
    CHECK(sub.variable(1).upper == ExtRational(Rational(0)));
  }

  Instance joint = lpText(
      "Minimize obj: x Subject To p: x + y >= 3\nBounds\n x <= 1\n y <= 1\nEnd");
  IISResult r = deletionFilter(joint, o);
  CHECK(r.constraintIndices == std::vector<int>{0});
  CHECK(r.allBounds);
}

TEST_CASE("element order and subsystems") {
  Instance inst = corpusInstance("infeas.lp");
  auto all = iisElements(inst, true);
  REQUIRE(all.size() == 7);
  CHECK((all[0] == IISElement{IISElement::Kind::Constraint, 0, BoundSide::Lower}));
  CHECK((all[3] == IISElement{IISElement::Kind::Bound, 0, BoundSide::Lower}));
  CHECK((all[4] == IISElement{IISElement::Kind::Bound, 0, BoundSide::Upper}));
  CHECK(iisElements(inst, false).size() == 3);

  Instance sub = subsystem(inst, {all[0], all[4]}, true);
  CHECK(sub.numConstraints() == 1);
  CHECK(sub.variable(0).lower.isNegInf());
  CHECK(sub.variable(0).upper == ExtRational(Rational(10)));
  CHECK(sub.objective().empty());

  IISResult r = deletionFilter(inst);
  Instance kept = subsystem(inst, r);
  CHECK(kept.objective() == inst.objective());
  CHECK(kept.constraint(1).name == "hi");
}

TEST_CASE("irreducibility can be skipped") {
  gen::Rng rng(121);
  gen::MilpOptions opts;
  opts.plantedRhs = 0.3;
  int seen = 0;
  while (seen < 15) {
    Instance inst = gen::randomMilp(rng, opts);
    if (!infeasible(inst)) continue;
    ++seen;
    for (IISMethod m : kMethods) {
      IISOptions o;
      o.includeBounds = false;
      o.irreducible = false;
      IISResult loose = run(m, inst, o);
      CHECK_FALSE(loose.irreducible);
      CHECK(infeasible(subsystem(inst, loose)));
      o.irreducible = true;
      IISResult tight = run(m, inst, o);
      CHECK(tight.irreducible);
      CHECK(tight.oracleCalls >= loose.oracleCalls);
      // Every element of the irreducible result is needed.
      for (std::size_t k = 0; k < tight.constraintIndices.size(); ++k) {
        IISResult smaller = tight;
        smaller.constraintIndices.erase(smaller.constraintIndices.begin() + k);
        CHECK_FALSE(infeasible(subsystem(inst, smaller)));
      }
    }
  }
}

TEST_CASE("an undecidable full instance raises") {
  Instance inst = corpusInstance("infeas.lp");
  CHECK((checkFeasibility(inst, 0) == Feasibility::Unknown));
  IISOptions o;
  o.nodeLimit = 0;
  for (IISMethod m : kMethods) CHECK_THROWS_AS(run(m, inst, o), IISError);
}

TEST_CASE("method names") {
  CHECK((parseIISMethod("deletion") == IISMethod::Deletion));
  CHECK((parseIISMethod("additive") == IISMethod::Additive));
  CHECK_THROWS(parseIISMethod("quick"));
  CHECK(std::string(toString(IISMethod::Additive)) == "additive");
}
