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

#ifndef EXACTMIP_TESTS_UNIT_HELPERS_HPP_
#define EXACTMIP_TESTS_UNIT_HELPERS_HPP_

#include <string>

#include "doctest.h"
#include "exactmip/io.hpp"
#include "exactmip/rational.hpp"

namespace exactmip {

inline Rational Q(const char* text) { return Rational::parse(text); }

inline Instance lpText(const std::string& text) {
  return readInstance(text, FormatTag::Lp);
}

inline Instance corpusInstance(const std::string& file) {
  return readInstanceFile(std::string(EXACTMIP_CORPUS_DIR) + "/" + file);
}

inline doctest::String toString(const Rational& r) { return r.str().c_str(); }
inline doctest::String toString(const ExtRational& r) {
  return r.str().c_str();
}

}  // namespace exactmip

#endif  // EXACTMIP_TESTS_UNIT_HELPERS_HPP_
