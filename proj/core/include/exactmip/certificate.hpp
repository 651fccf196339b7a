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

#ifndef EXACTMIP_CERTIFICATE_HPP_
#define EXACTMIP_CERTIFICATE_HPP_

#include <stdexcept>
#include <string>

#include "exactmip/bnb.hpp"
#include "exactmip/model.hpp"

namespace exactmip {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes the problem, the goal, the solutions and the derivation log
/// of `trace` as a certificate file. Equality rows become a G row followed
/// by an L row; every finite bound becomes a row after the model rows.
/// Throws CertificateError for a trace without a final line.
std::string emitCertificate(const SolveTrace& trace, const Instance& instance);

}  // namespace exactmip

#endif  // EXACTMIP_CERTIFICATE_HPP_
