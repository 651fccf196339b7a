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

#ifndef EXACTMIP_VERIFIER_HPP_
#define EXACTMIP_VERIFIER_HPP_

#include <string>
#include <string_view>

namespace exactmip {

struct VerifyResult {
  bool accepted = false;
  std::string reason;
  /// 1-based line of the offending entry; 0 for whole-file problems.
  int line = 0;

  explicit operator bool() const { return accepted; }
};

/// Checks a certificate in exact arithmetic: parses it, re-checks every
/// solution against the stated rows and integrality, checks each
/// derivation against its rule and tracks assumptions through lineage,
/// and checks that the last derivation proves the goal unconditionally.
/// Never throws on bad input.
VerifyResult verifyCertificate(std::string_view content);

}  // namespace exactmip

#endif  // EXACTMIP_VERIFIER_HPP_
