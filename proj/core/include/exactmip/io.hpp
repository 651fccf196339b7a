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

#ifndef EXACTMIP_IO_HPP_
#define EXACTMIP_IO_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "exactmip/model.hpp"

namespace exactmip {

enum class FormatTag { Mps, Lp };

/// Reader failure; line() is 1-based, 0 when no line applies.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses an instance. Every numeric literal is read exactly; "p/q"
/// literals are accepted in both formats.
///
/// MPS subset: NAME, OBJSENSE, ROWS, COLUMNS (with MARKER INTORG/INTEND),
/// RHS, BOUNDS (LO UP FX FR MI PL BV UI LI), ENDATA. RANGES is rejected.
/// Columns default to [0, +inf), integer columns included.
///
/// LP subset: Minimize/Maximize, Subject To, Bounds, General, Binary, End.
/// Constraint right-hand sides are single constants.
Instance readInstance(std::string_view content, FormatTag format);

/// Writes a file that reads back to the same instance. Names that the
/// format cannot carry cause all names of that kind to be replaced by
/// x0, x1, ... (variables) or c0, c1, ... (constraints).
std::string writeInstance(const Instance& instance, FormatTag format);

/// Infers the format from a .mps or .lp suffix.
std::optional<FormatTag> formatFromPath(const std::filesystem::path& path);

Instance readInstanceFile(const std::filesystem::path& path,
                          std::optional<FormatTag> format = std::nullopt);
void writeInstanceFile(const Instance& instance,
                       const std::filesystem::path& path, FormatTag format);

}  // namespace exactmip

#endif  // EXACTMIP_IO_HPP_
