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

#include "exactmip/bnb.hpp"

#include "exactmip/certificate.hpp"
#include "exactmip/lp.hpp"
#include "exactmip/verifier.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace exactmip;

namespace {

Instance smallKnapsack() {
  return lpText(
      "Maximize obj: 5 x1 + 4 x2 Subject To c: 3 x1 + 2 x2 <= 4\n"
      "Binary\n x1 x2\nEnd");
}

bool hasRule(const SolveTrace& t, ProofRule rule) {
  for (const auto& l : t.log.lines()) {
    if (l.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("binary knapsack") {
  Instance inst = smallKnapsack();
  SolveResult r = solve(inst);
  REQUIRE((r.status == SolveStatus::Optimal));
  CHECK(r.primalBound == ExtRational(Rational(5)));
  CHECK(r.dualBound == ExtRational(Rational(5)));
  CHECK(*r.incumbent == Assignment{1, 0});
  REQUIRE(r.trace);
  CHECK(r.trace->lowerBound == ExtRational(Rational(-5)));
  VerifyResult v = verifyCertificate(emitCertificate(*r.trace, inst));
  CHECK_MESSAGE(v.accepted, v.reason);
}

TEST_CASE("the corpus knapsack branches at the root") {
  Instance inst = corpusInstance("knapsack.mps");
  SolveParams p;
  p.cuts = false;
  p.heuristics = false;
  SolveResult r = solve(inst, p);
  REQUIRE((r.status == SolveStatus::Optimal));
  CHECK(r.primalBound == ExtRational(Rational(5)));
  CHECK(r.stats.nodes >= 2);
  CHECK(hasRule(*r.trace, ProofRule::Uns));
}

TEST_CASE("infeasible instance carries a contradiction") {
  Instance inst = lpText(
      "Minimize obj: x Subject To a: x >= 2\n b: x <= 1\nBounds\n x free\nEnd");
  SolveResult r = solve(inst);
  REQUIRE((r.status == SolveStatus::Infeasible));
  REQUIRE(r.trace);
  CHECK(r.trace->infeasible);
  CHECK(r.trace->log.line(r.trace->finalLine).constraint.isContradiction());
  CHECK(r.primalBound.isPosInf());
  CHECK(r.dualBound.isPosInf());
}

TEST_CASE("integer ray gives unbounded") {
  Instance inst = lpText("Minimize obj: -x Subject To c: x >= 0\nGeneral\n x\nEnd");
  SolveResult r = solve(inst);
  CHECK((r.status == SolveStatus::Unbounded));
  CHECK(r.primalBound.isNegInf());
  CHECK_FALSE(r.trace);
}

TEST_CASE("unbounded relaxation of an integer-infeasible instance") {
  Instance inst = lpText(
      "Minimize obj: -y Subject To c: 2 x = 1\nGeneral\n x\nEnd");
  SolveResult r = solve(inst);
  REQUIRE((r.status == SolveStatus::Infeasible));
  VerifyResult v = verifyCertificate(emitCertificate(*r.trace, inst));
  CHECK_MESSAGE(v.accepted, v.reason);
}

TEST_CASE("limits stop with valid bounds") {
  gen::Rng rng(91);
  gen::MilpOptions opts;
  opts.maxVars = 6;
  opts.boundRange = 8;
  int limited = 0;
  for (int k = 0; k < 60; ++k) {
    Instance inst = gen::randomMilp(rng, opts);
    SolveParams p;
    p.nodeLimit = 1;
    p.cuts = false;
    SolveResult r = solve(inst, p);
    oracle::Outcome o = oracle::solveMilp(oracle::fromInstance(inst));
    if (r.status != SolveStatus::LimitReached) continue;
    ++limited;
    CHECK_FALSE(r.trace);
    if (!o.feasible) continue;
    ExtRational best = inst.toReported(ExtRational(oracle::toRational(o.value)));
    bool max = inst.objectiveSense() == ObjectiveSense::Maximize;
    CHECK((max ? r.dualBound >= best : r.dualBound <= best));
    if (r.incumbent) {
      CHECK(checkFeasible(inst, *r.incumbent).feasible());
      CHECK((max ? r.primalBound <= best : r.primalBound >= best));
    }
  }
  CHECK(limited > 0);

  SolveParams p;
  p.timeLimitSeconds = 0;
  SolveResult r = solve(corpusInstance("knapsack.mps"), p);
  CHECK((r.status == SolveStatus::LimitReached));
}

TEST_CASE("every parameter setting agrees with enumeration") {
  std::vector<SolveParams> variants(5);
  variants[1].cuts = false;
  variants[2].heuristics = false;
  variants[3].branching = BranchingRule::Pscost;
  variants[4].branching = BranchingRule::FirstFrac;
  variants[4].proofRetention = 0;
  gen::Rng rng(92);
  for (int k = 0; k < 80; ++k) {
    Instance inst = gen::randomMilp(rng);
    oracle::Outcome o = oracle::solveMilp(oracle::fromInstance(inst));
    for (const auto& params : variants) {
      SolveResult r = solve(inst, params);
      if (o.feasible) {
        REQUIRE((r.status == SolveStatus::Optimal));
        CHECK(r.primalBound ==
              inst.toReported(ExtRational(oracle::toRational(o.value))));
      } else {
        REQUIRE((r.status == SolveStatus::Infeasible));
      }
      VerifyResult v = verifyCertificate(emitCertificate(*r.trace, inst));
      CHECK_MESSAGE(v.accepted, v.reason);
    }
  }
}

TEST_CASE("repair rounds, fixes and re-solves") {
  Instance pure = smallKnapsack();
  CHECK(repairSolution(pure, {Rational(1), Rational(0)}) == Assignment{1, 0});
  CHECK(repairSolution(pure, {Rational(9, 10), Rational(1, 10)}) ==
        Assignment{1, 0});
  CHECK_FALSE(repairSolution(pure, {Rational(1, 2), Rational(1, 2)}));

  Instance mixed = lpText(
      "Minimize obj: x + y Subject To c: x + y >= 5/2\nBounds\n x <= 4\n"
      "y <= 4\nGeneral\n x\nEnd");
  auto fixed = repairSolution(mixed, {Rational(7, 5), Rational(0)});
  REQUIRE(fixed);
  CHECK(*fixed == Assignment{1, Rational(3, 2)});
}

TEST_CASE("dual proofs") {
  Instance contra = lpText(
      "Minimize obj: x Subject To a: x >= 2\n b: x <= 1\nBounds\n x free\nEnd");
  LocalBounds box = globalBounds(contra);
  LPResult r = solveLP(contra, box);
  LinearConstraint proof = deriveDualProof(contra, box, r.farkas);
  CHECK(proof.coefficients.empty());
  CHECK(proof.rhs == Rational(1));

  Instance node = lpText(
      "Minimize obj: x Subject To a: x + y >= 2\nBounds\n y <= 1\nEnd");
  LocalBounds local = globalBounds(node);
  local[0].upper = Rational(0);
  LPResult nr = solveLP(node, local);
  REQUIRE((nr.status == LPStatus::Infeasible));
  LinearConstraint localProof = deriveDualProof(node, local, nr.farkas);
  REQUIRE(localProof.coefficients.size() == 2);
  Rational scale = localProof.coefficients[0].value;
  CHECK(localProof.coefficients[1].value == scale);
  CHECK(localProof.rhs == Rational(2) * scale);

  FarkasProof zero{{Rational(0)}, {}, {}};
  CHECK_THROWS_AS(deriveDualProof(node, local, zero), ProofError);
  FarkasProof negative{{Rational(-1)}, {}, {}};
  CHECK_THROWS_AS(deriveDualProof(node, local, negative), ProofError);
}
