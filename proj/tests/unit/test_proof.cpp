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

#include "exactmip/proof.hpp"

#include "exactmip/bnb.hpp"
#include "exactmip/certificate.hpp"
#include "exactmip/lp.hpp"
#include "exactmip/verifier.hpp"
#include "generators.hpp"
#include "helpers.hpp"

using namespace exactmip;

namespace {

ProofConstraint ge(SparseVector a, Rational rhs) {
  return {std::move(a), Sense::GreaterEqual, std::move(rhs)};
}

ProofConstraint le(SparseVector a, Rational rhs) {
  return {std::move(a), Sense::LessEqual, std::move(rhs)};
}

// Certificate of the whole log with an unconstrained goal, checked by the
// verifier.
VerifyResult verifyLog(const Instance& inst, const ProofLog& log) {
  SolveTrace trace(inst);
  trace.log = log;
  trace.finalLine = log.size() - 1;
  return verifyCertificate(emitCertificate(trace, inst));
}

}  // namespace

TEST_CASE("contradictions") {
  CHECK(ge({}, 1).isContradiction());
  CHECK(le({}, -1).isContradiction());
  CHECK_FALSE(ge({}, 0).isContradiction());
  CHECK_FALSE(ge({{0, 1}}, 1).isContradiction());
}

TEST_CASE("references resolve to rows and bounds") {
  Instance inst = lpText(
      "Minimize obj: x Subject To c: 2 x <= 3\n e: x + y = 1\nBounds\n"
      "x <= 5\n y free\nGeneral\n x\nEnd");
  ProofLog log(inst);
  CHECK(log.resolve(ProofRef::rowLess(0)).rhs == Rational(3));
  CHECK_THROWS_AS(log.resolve(ProofRef::rowGreater(0)), ProofError);
  CHECK((log.resolve(ProofRef::rowGreater(1)).sense == Sense::GreaterEqual));
  CHECK(log.resolve(ProofRef::upperBound(0)).rhs == Rational(5));
  CHECK_THROWS_AS(log.resolve(ProofRef::lowerBound(1)), ProofError);
  CHECK_THROWS_AS(log.resolve(ProofRef::line(0)), ProofError);
  CHECK_THROWS_AS(log.resolve(ProofRef::rowLess(7)), ProofError);
}

TEST_CASE("the x <= 1 cut from 2x <= 3") {
  Instance inst = lpText(
      "Minimize obj: -x Subject To c: 2 x <= 3\nGeneral\n x\nEnd");
  ProofLog log(inst);
  int half = log.linear({{ProofRef::rowLess(0), Rational(1, 2)}}, Sense::LessEqual);
  CHECK(log.line(half).constraint.rhs == Rational(3, 2));
  int rounded = log.round({{ProofRef::rowLess(0), Rational(1, 2)}}, Sense::LessEqual);
  CHECK(log.line(rounded).constraint.rhs == Rational(1));

  int down = log.assume(le({{0, 1}}, 1));
  int up = log.assume(ge({{0, 1}}, 2));
  int contra = log.linear({{ProofRef::line(up), Rational(1)},
                           {ProofRef::rowLess(0), Rational(-1, 2)}},
                          Sense::GreaterEqual);
  CHECK(log.line(contra).constraint.isContradiction());
  int cut = log.unsplit(down, down, contra, up, le({{0, 1}}, 1));
  CHECK(log.line(cut).constraint.rhs == Rational(1));
  VerifyResult v = verifyLog(inst, log);
  CHECK_MESSAGE(v.accepted, v.reason);
}

TEST_CASE("invalid derivations throw") {
  Instance inst = lpText(
      "Minimize obj: x + y Subject To c: 2 x + y <= 3\nGeneral\n x\nEnd");
  ProofLog log(inst);
  CHECK_THROWS_AS(log.linear({{ProofRef::rowLess(0), Rational(-1)}},
                             Sense::LessEqual),
                  ProofError);
  CHECK_THROWS_AS(log.linear({{ProofRef::rowLess(0), Rational(1)}}, Sense::Equal),
                  ProofError);
  // y is continuous.
  CHECK_THROWS_AS(log.round({{ProofRef::rowLess(0), Rational(1)}}, Sense::LessEqual),
                  ProofError);
  int a = log.assume(le({{0, 1}}, 0));
  int b = log.assume(ge({{0, 1}}, 2));
  CHECK_THROWS_AS(log.unsplit(a, a, b, b, ge({}, 0)), ProofError);
  int c = log.assume(ge({{1, 1}}, 1));
  CHECK_THROWS_AS(log.unsplit(a, a, c, c, ge({}, 0)), ProofError);
  CHECK_THROWS_AS(log.linear({{ProofRef::rowLess(0), Rational(1)}},
                             Sense::LessEqual, Rational(2)),
                  ProofError);
}

TEST_CASE("dual bound lines match the LP value") {
  gen::Rng rng(51);
  int logged = 0;
  for (int k = 0; k < 150; ++k) {
    Instance inst = gen::randomMilp(rng);
    LocalBounds box = globalBounds(inst);
    LPResult r = solveLP(inst, box);
    ProofLog log(inst);
    if (r.status == LPStatus::Optimal) {
      auto line = logDualBound(log, inst, modelRowRefs(inst),
                               BoundSources::global(inst), box, r.duals,
                               inst.minObjective());
      REQUIRE(line);
      const ProofConstraint& c = log.line(*line).constraint;
      CHECK(c.coefficients == inst.minObjective());
      CHECK(c.rhs == r.objective.value());
      ++logged;
    } else if (r.status == LPStatus::Infeasible) {
      int line = logFarkas(log, inst, modelRowRefs(inst),
                           BoundSources::global(inst), r.farkas);
      CHECK(log.line(line).constraint.isContradiction());
      ++logged;
    } else {
      continue;
    }
    VerifyResult v = verifyLog(inst, log);
    CHECK_MESSAGE(v.accepted, v.reason);
  }
  CHECK(logged == 150);
}
