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

#include "exactmip/verifier.hpp"

#include "exactmip/bnb.hpp"
#include "exactmip/certificate.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "invalid_certificates.hpp"

using namespace exactmip;

namespace {

std::string replaceOnce(std::string text, const std::string& from,
                        const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("the hand-built base certificate is accepted") {
  VerifyResult v = verifyCertificate(support::validCertificate());
  CHECK_MESSAGE(v.accepted, v.reason);
  CHECK(static_cast<bool>(v));
}

TEST_CASE("each catalog certificate is rejected for its reason") {
  for (const auto& item : support::invalidCertificates()) {
    CAPTURE(item.name);
    VerifyResult v = verifyCertificate(item.text);
    CHECK_FALSE(v.accepted);
    CHECK_MESSAGE(v.reason.find(item.reason) != std::string::npos, v.reason);
    CHECK(v.line > 0);
  }
}

TEST_CASE("rejections name the derivation line") {
  std::string base = support::validCertificate();
  // d1 sits on line 18 of the base text.
  VerifyResult v = verifyCertificate(
      replaceOnce(base, "d1 G 1 1 0 1 { rnd 1 3 1 }", "d1 G 2 1 0 1 { rnd 1 3 1 }"));
  CHECK_FALSE(v.accepted);
  CHECK(v.line == 18);
  VerifyResult cont = verifyCertificate(
      replaceOnce(base, "d1 G 1 1 0 1 { rnd 1 3 1 }", "d1 G 0 1 1 1 { rnd 1 2 1 }"));
  CHECK(cont.reason.find("continuous") != std::string::npos);
  CHECK(cont.line == 18);
}

TEST_CASE("structural errors") {
  std::string base = support::validCertificate();
  CHECK_FALSE(verifyCertificate("").accepted);
  CHECK_FALSE(verifyCertificate(replaceOnce(base, "VER 1.0", "VER 2.0")).accepted);
  CHECK_FALSE(verifyCertificate(base + "extra\n").accepted);
  CHECK_FALSE(verifyCertificate(base.substr(0, base.size() - 10)).accepted);
  VerifyResult order = verifyCertificate(
      replaceOnce(base, "c0 G 1 1 0 2", "c0 G 1 2 0 2 0 1"));
  CHECK(order.reason.find("strictly increasing") != std::string::npos);
  VerifyResult zero = verifyCertificate(replaceOnce(base, "c0 G 1 1 0 2", "c0 G 1 1 0 0"));
  CHECK(zero.reason.find("zero") != std::string::npos);
  VerifyResult rule = verifyCertificate(
      replaceOnce(base, "{ lin 1 6 1 }", "{ mix 1 6 1 }"));
  CHECK(rule.reason.find("unknown rule") != std::string::npos);
}

TEST_CASE("a contradiction implies any statement") {
  std::string base = support::validCertificate();
  std::string cert = replaceOnce(base, "d6 G 1 1 0 1 { uns 7 5 8 6 }",
                                 "d6 G 1 1 0 1 { uns 7 5 7 6 }");
  // d4 (index 7) holds under x <= 0 only, so merging it with itself under
  // x >= 1 leaves the assumption x <= 0 in place.
  VerifyResult v = verifyCertificate(cert);
  CHECK_FALSE(v.accepted);
  CHECK(v.reason.find("assumptions") != std::string::npos);
}

TEST_CASE("equality rows take multipliers of either sign") {
  std::string cert =
      "VER 1.0\nVAR 1\nx\nINT 0\nOBJ min\n1 0 1\nCON 1\ne E 2 1 0 1\n"
      "RTP range 2 2\nSOL 1\ns 1 0 2\nDER 2\n"
      "d0 L 2 1 0 1 { lin 1 0 1 }\nd1 G 2 1 0 1 { lin 1 0 1 }\n";
  VerifyResult v = verifyCertificate(cert);
  CHECK_MESSAGE(v.accepted, v.reason);
}

TEST_CASE("emitted certificates survive whitespace changes") {
  gen::Rng rng(111);
  for (int k = 0; k < 30; ++k) {
    Instance inst = gen::randomMilp(rng);
    SolveResult r = solve(inst);
    std::string cert = emitCertificate(*r.trace, inst);
    std::string spaced;
    for (char c : cert) spaced += c == ' ' ? std::string("  \t") : std::string(1, c);
    CHECK(verifyCertificate(spaced).accepted);
  }
}
