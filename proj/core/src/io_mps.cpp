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

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "io_internal.hpp"

namespace exactmip::detail {

namespace {

enum class Section { None, Name, ObjSense, Rows, Columns, Rhs, Bounds, End };

struct RowEntry {
  Sense sense = Sense::LessEqual;
  bool objective = false;
  bool ignored = false;  // additional free rows
  int index = -1;        // constraint index when not objective
};

class MpsReader {
 public:
  explicit MpsReader(std::string_view content) : content_(content) {}

  Instance read();

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw IoError(what, lineNo_);
  }

  Rational number(const std::string& token) const {
    try {
      return Rational::parse(token);
    } catch (const RationalParseError& e) {
      error(e.what());
    } catch (const ArithmeticError& e) {
      error(e.what());
    }
  }

  int column(const std::string& name, bool create) {
    auto it = columnIndex_.find(name);
    if (it != columnIndex_.end()) return it->second;
    if (!create) error("unknown column '" + name + "'");
    int j = static_cast<int>(variables_.size());
    Variable v;
    v.name = name;
    v.integral = inIntegerBlock_;
    variables_.push_back(std::move(v));
    columnIndex_.emplace(name, j);
    return j;
  }

  const RowEntry& row(const std::string& name) const {
    auto it = rows_.find(name);
    if (it == rows_.end()) error("unknown row '" + name + "'");
    return it->second;
  }

  void rowsLine(const std::vector<std::string>& tok);
  void columnsLine(const std::vector<std::string>& tok);
  void rhsLine(const std::vector<std::string>& tok);
  void boundsLine(const std::vector<std::string>& tok);

  std::string_view content_;
  int lineNo_ = 0;
  std::string name_;
  ObjectiveSense sense_ = ObjectiveSense::Minimize;
  bool haveObjective_ = false;
  bool inIntegerBlock_ = false;
  Rational offset_;
  std::unordered_map<std::string, RowEntry> rows_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Variable> variables_;
  std::unordered_map<std::string, int> columnIndex_;
  SparseVector objective_;
  std::set<std::pair<int, int>> seenEntries_;  // (row or -1, column)
};

void MpsReader::rowsLine(const std::vector<std::string>& tok) {
  if (tok.size() != 2) error("ROWS entry needs a type and a name");
  const std::string& type = tok[0];
  const std::string& name = tok[1];
  if (rows_.count(name)) error("duplicate row '" + name + "'");
  RowEntry entry;
  if (type == "N") {
    if (haveObjective_) {
      entry.ignored = true;
    } else {
      entry.objective = true;
      haveObjective_ = true;
    }
  } else {
    if (type == "L") {
      entry.sense = Sense::LessEqual;
    } else if (type == "G") {
      entry.sense = Sense::GreaterEqual;
    } else if (type == "E") {
      entry.sense = Sense::Equal;
    } else {
      error("unknown row type '" + type + "'");
    }
    entry.index = static_cast<int>(constraints_.size());
    LinearConstraint c;
    c.name = name;
    c.sense = entry.sense;
    constraints_.push_back(std::move(c));
  }
  rows_.emplace(name, entry);
}

void MpsReader::columnsLine(const std::vector<std::string>& tok) {
  if (tok.size() >= 3 && tok[1] == "'MARKER'") {
    if (tok[2] == "'INTORG'") {
      inIntegerBlock_ = true;
    } else if (tok[2] == "'INTEND'") {
      inIntegerBlock_ = false;
    } else {
      error("unknown marker " + tok[2]);
    }
    return;
  }
  if (tok.size() != 3 && tok.size() != 5) {
    error("COLUMNS entry needs a column and one or two (row, value) pairs");
  }
  int j = column(tok[0], true);
  if (inIntegerBlock_) variables_[j].integral = true;
  for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
    const RowEntry& r = row(tok[k]);
    Rational value = number(tok[k + 1]);
    if (r.ignored) continue;
    int rowKey = r.objective ? -1 : r.index;
    if (!seenEntries_.insert({rowKey, j}).second) {
      error("duplicate entry for column '" + tok[0] + "' in row '" + tok[k] +
            "'");
    }
    if (r.objective) {
      objective_.push_back({j, std::move(value)});
    } else {
      constraints_[r.index].coefficients.push_back({j, std::move(value)});
    }
  }
}

void MpsReader::rhsLine(const std::vector<std::string>& tok) {
  // An odd token count carries a leading RHS set name.
  std::size_t start = tok.size() % 2 == 1 ? 1 : 0;
  if (tok.size() - start < 2) error("RHS entry needs (row, value) pairs");
  for (std::size_t k = start; k + 1 < tok.size(); k += 2) {
    const RowEntry& r = row(tok[k]);
    Rational value = number(tok[k + 1]);
    if (r.ignored) continue;
    if (r.objective) {
      offset_ = -value;
    } else {
      constraints_[r.index].rhs = std::move(value);
    }
  }
}

void MpsReader::boundsLine(const std::vector<std::string>& tok) {
  if (tok.size() < 2) error("BOUNDS entry too short");
  const std::string& type = tok[0];
  static const std::set<std::string> valued = {"LO", "UP", "FX", "UI", "LI"};
  static const std::set<std::string> unvalued = {"FR", "MI", "PL", "BV"};
  std::string colName;
  std::optional<Rational> value;
  if (valued.count(type)) {
    if (tok.size() == 4) {
      colName = tok[2];
      value = number(tok[3]);
    } else if (tok.size() == 3) {
      colName = tok[1];
      value = number(tok[2]);
    } else {
      error("bound type " + type + " needs a column and a value");
    }
  } else if (unvalued.count(type)) {
    if (tok.size() == 4) {
      colName = tok[2];
    } else if (tok.size() == 3) {
      colName = columnIndex_.count(tok[1]) && !columnIndex_.count(tok[2])
                    ? tok[1]
                    : tok[2];
    } else {
      colName = tok[1];
    }
  } else {
    error("unknown bound type '" + type + "'");
  }
  int j = column(colName, false);
  Variable& v = variables_[j];
  if (type == "LO") {
    v.lower = *value;
  } else if (type == "UP") {
    v.upper = *value;
  } else if (type == "FX") {
    v.lower = *value;
    v.upper = *value;
  } else if (type == "FR") {
    v.lower = ExtRational::negInf();
    v.upper = ExtRational::posInf();
  } else if (type == "MI") {
    v.lower = ExtRational::negInf();
  } else if (type == "PL") {
    v.upper = ExtRational::posInf();
  } else if (type == "BV") {
    v.lower = Rational(0);
    v.upper = Rational(1);
    v.integral = true;
  } else if (type == "UI") {
    v.upper = *value;
    v.integral = true;
  } else if (type == "LI") {
    v.lower = *value;
    v.integral = true;
  }
}

Instance MpsReader::read() {
  Section section = Section::None;
  bool sawRows = false;
  std::size_t rowsDeclared = 0;
  std::istringstream in{std::string(content_)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineNo_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::vector<std::string> tok = splitWhitespace(line);
    if (tok.empty()) continue;

    bool header = line[0] != ' ' && line[0] != '\t';
    if (header) {
      const std::string& key = tok[0];
      if (section == Section::Rows && rowsDeclared == 0) {
        error("ROWS section is empty");
      }
      if (key == "NAME") {
        section = Section::Name;
        if (tok.size() > 1) name_ = tok[1];
      } else if (key == "OBJSENSE") {
        section = Section::ObjSense;
        if (tok.size() > 1) {
          sense_ = parseObjSense(tok[1]);
          section = Section::None;
        }
      } else if (key == "ROWS") {
        section = Section::Rows;
        sawRows = true;
      } else if (key == "COLUMNS") {
        section = Section::Columns;
      } else if (key == "RHS") {
        section = Section::Rhs;
      } else if (key == "RANGES") {
        error("RANGES section is not supported");
      } else if (key == "BOUNDS") {
        section = Section::Bounds;
      } else if (key == "ENDATA") {
        section = Section::End;
        break;
      } else {
        error("unknown section '" + key + "'");
      }
      continue;
    }

    switch (section) {
      case Section::Rows:
        rowsLine(tok);
        ++rowsDeclared;
        break;
      case Section::Columns:
        columnsLine(tok);
        break;
      case Section::Rhs:
        rhsLine(tok);
        break;
      case Section::Bounds:
        boundsLine(tok);
        break;
      case Section::ObjSense:
        sense_ = parseObjSense(tok[0]);
        break;
      default:
        error("data line outside of a section");
    }
  }
  if (section == Section::Rows && rowsDeclared == 0) {
    error("ROWS section is empty");
  }
  if (!sawRows) error("missing ROWS section");
  if (section != Section::End) error("missing ENDATA");

  try {
    return Instance::build(std::move(variables_), std::move(constraints_),
                           std::move(objective_), sense_, offset_, name_);
  } catch (const ModelError& e) {
    throw IoError(e.what(), 0);
  }
}

std::string mpsSafe(const std::string& s) {
  return s.empty() || s.find_first_of(" \t\r\n") != std::string::npos ||
                 s[0] == '*'
             ? std::string()
             : s;
}

}  // namespace

ObjectiveSense parseObjSense(const std::string& token) {
  std::string t = toLower(token);
  if (t == "max" || t == "maximize" || t == "maximise") {
    return ObjectiveSense::Maximize;
  }
  if (t == "min" || t == "minimize" || t == "minimise") {
    return ObjectiveSense::Minimize;
  }
  throw IoError("unknown objective sense '" + token + "'", 0);
}

Instance readMps(std::string_view content) {
  return MpsReader(content).read();
}

std::string writeMps(const Instance& instance) {
  const int n = instance.numVariables();
  const int m = instance.numConstraints();

  bool renameColumns = false;
  for (const auto& v : instance.variables()) {
    if (mpsSafe(v.name).empty()) renameColumns = true;
  }
  bool renameRows = false;
  for (const auto& c : instance.constraints()) {
    if (mpsSafe(c.name).empty()) renameRows = true;
  }
  auto colName = [&](int j) {
    return renameColumns ? "x" + std::to_string(j) : instance.variable(j).name;
  };
  std::vector<std::string> rowNames(m);
  std::set<std::string> used;
  for (int i = 0; i < m; ++i) {
    rowNames[i] =
        renameRows ? "c" + std::to_string(i) : instance.constraint(i).name;
    used.insert(rowNames[i]);
  }
  std::string objName = "obj";
  for (int k = 1; used.count(objName); ++k) objName = "obj" + std::to_string(k);

  std::vector<std::vector<std::pair<int, Rational>>> columns(n);
  for (int i = 0; i < m; ++i) {
    for (const auto& t : instance.constraint(i).coefficients) {
      columns[t.index].push_back({i, t.value});
    }
  }
  std::vector<Rational> objCoef(n);
  for (const auto& t : instance.objective()) objCoef[t.index] = t.value;

  std::ostringstream out;
  std::string name = mpsSafe(instance.name());
  out << "NAME          " << (name.empty() ? "exactmip" : name) << "\n";
  if (instance.objectiveSense() == ObjectiveSense::Maximize) {
    out << "OBJSENSE\n    MAX\n";
  }
  out << "ROWS\n";
  out << " N  " << objName << "\n";
  for (int i = 0; i < m; ++i) {
    const char* type = "L";
    if (instance.constraint(i).sense == Sense::GreaterEqual) type = "G";
    if (instance.constraint(i).sense == Sense::Equal) type = "E";
    out << " " << type << "  " << rowNames[i] << "\n";
  }
  out << "COLUMNS\n";
  bool inInt = false;
  for (int j = 0; j < n; ++j) {
    bool integral = instance.variable(j).integral;
    if (integral != inInt) {
      out << "    MARKER    'MARKER'    " << (integral ? "'INTORG'" : "'INTEND'")
          << "\n";
      inInt = integral;
    }
    out << "    " << colName(j) << "  " << objName << "  " << objCoef[j].str()
        << "\n";
    for (const auto& [i, value] : columns[j]) {
      out << "    " << colName(j) << "  " << rowNames[i] << "  " << value.str()
          << "\n";
    }
  }
  if (inInt) out << "    MARKER    'MARKER'    'INTEND'\n";
  out << "RHS\n";
  for (int i = 0; i < m; ++i) {
    if (!instance.constraint(i).rhs.isZero()) {
      out << "    RHS  " << rowNames[i] << "  " << instance.constraint(i).rhs.str()
          << "\n";
    }
  }
  if (!instance.objectiveOffset().isZero()) {
    out << "    RHS  " << objName << "  " << (-instance.objectiveOffset()).str()
        << "\n";
  }
  out << "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    const auto& v = instance.variable(j);
    const std::string c = colName(j);
    if (v.lower.isFinite() && v.upper.isFinite() && v.lower == v.upper) {
      out << " FX BND  " << c << "  " << v.lower.str() << "\n";
      continue;
    }
    if (v.lower.isNegInf() && v.upper.isPosInf()) {
      out << " FR BND  " << c << "\n";
      continue;
    }
    if (v.lower.isNegInf()) {
      out << " MI BND  " << c << "\n";
    } else if (!v.lower.value().isZero()) {
      out << " LO BND  " << c << "  " << v.lower.str() << "\n";
    }
    if (v.upper.isFinite()) {
      out << " UP BND  " << c << "  " << v.upper.str() << "\n";
    }
  }
  out << "ENDATA\n";
  return out.str();
}

}  // namespace exactmip::detail
