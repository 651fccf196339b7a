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

#include "exactmip/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "io_internal.hpp"

namespace exactmip {

namespace detail {

std::vector<std::string> splitWhitespace(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string toLower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

}  // namespace detail

Instance readInstance(std::string_view content, FormatTag format) {
  return format == FormatTag::Mps ? detail::readMps(content)
                                  : detail::readLp(content);
}

std::string writeInstance(const Instance& instance, FormatTag format) {
  return format == FormatTag::Mps ? detail::writeMps(instance)
                                  : detail::writeLp(instance);
}

std::optional<FormatTag> formatFromPath(const std::filesystem::path& path) {
  std::string ext = detail::toLower(path.extension().string());
  if (ext == ".mps") return FormatTag::Mps;
  if (ext == ".lp") return FormatTag::Lp;
  return std::nullopt;
}

Instance readInstanceFile(const std::filesystem::path& path,
                          std::optional<FormatTag> format) {
  if (!format) format = formatFromPath(path);
  if (!format) {
    throw IoError("cannot infer format of '" + path.string() + "'", 0);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return readInstance(buffer.str(), *format);
}

void writeInstanceFile(const Instance& instance,
                       const std::filesystem::path& path, FormatTag format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'", 0);
  out << writeInstance(instance, format);
  if (!out) throw IoError("write to '" + path.string() + "' failed", 0);
}

}  // namespace exactmip
