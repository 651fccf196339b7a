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

#ifndef EXACTMIP_TOOLS_COMMANDS_HPP_
#define EXACTMIP_TOOLS_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "exactmip/bnb.hpp"
#include "exactmip/iis.hpp"

namespace exactmip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitFeasible = 3;

enum class Command { Solve, Verify, Iis };

struct RunConfig {
  Command command = Command::Solve;
  std::string input;
  std::optional<std::string> format;
  std::string certificate;
  std::string stats;
  std::string output;
  long nodeLimit = -1;
  SolveParams params;
  std::string branching = "aps";
  std::string gamma = "1/5";
  std::string iisMethod = "deletion";
  IISOptions iisOptions;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace exactmip::cli

#endif  // EXACTMIP_TOOLS_COMMANDS_HPP_
