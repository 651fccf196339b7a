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

#ifndef EXACTMIP_SRC_IO_INTERNAL_HPP_
#define EXACTMIP_SRC_IO_INTERNAL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "exactmip/io.hpp"

namespace exactmip::detail {

std::vector<std::string> splitWhitespace(const std::string& line);
std::string toLower(std::string s);
ObjectiveSense parseObjSense(const std::string& token);

Instance readMps(std::string_view content);
std::string writeMps(const Instance& instance);
Instance readLp(std::string_view content);
std::string writeLp(const Instance& instance);

}  // namespace exactmip::detail

#endif  // EXACTMIP_SRC_IO_INTERNAL_HPP_
