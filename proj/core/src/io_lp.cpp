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

#include <cctype>
#include <cstring>
#include <set>
#include <sstream>
#include <unordered_map>

#include "io_internal.hpp"

namespace exactmip::detail {

namespace {

enum class TokKind { Number, Ident, Sense, Colon, Plus, Minus, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  Sense sense = Sense::Equal;
  int line = 0;
};

constexpr const char* kIdentPunct = "_!\"#$%&(),;?@'{}|~";

bool identStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) ||
         (c != '\0' && std::strchr(kIdentPunct, c) != nullptr);
}

bool identChar(char c) {
  return identStart(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '.';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '\\') {
      while (i < n && s[i] != '\n') ++i;
      continue;
    }
    Token t;
    t.line = line;
    if (digit(c) || (c == '.' && i + 1 < n && digit(s[i + 1]))) {
      std::size_t start = i;
      while (i < n && digit(s[i])) ++i;
      if (i < n && s[i] == '.') {
        ++i;
        while (i < n && digit(s[i])) ++i;
      }
      if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t k = i + 1;
        if (k < n && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < n && digit(s[k])) {
          i = k;
          while (i < n && digit(s[i])) ++i;
        }
      }
      if (i < n && s[i] == '/' && i + 1 < n && digit(s[i + 1])) {
        ++i;
        while (i < n && digit(s[i])) ++i;
      }
      t.kind = TokKind::Number;
      t.text = std::string(s.substr(start, i - start));
    } else if (identStart(c)) {
      std::size_t start = i;
      while (i < n && identChar(s[i])) ++i;
      t.kind = TokKind::Ident;
      t.text = std::string(s.substr(start, i - start));
    } else if (c == '<' || c == '>' || c == '=') {
      t.kind = TokKind::Sense;
      char next = i + 1 < n ? s[i + 1] : '\0';
      if (c == '<') {
        t.sense = Sense::LessEqual;
        i += next == '=' ? 2 : 1;
      } else if (c == '>') {
        t.sense = Sense::GreaterEqual;
        i += next == '=' ? 2 : 1;
      } else if (next == '<') {
        t.sense = Sense::LessEqual;
        i += 2;
      } else if (next == '>') {
        t.sense = Sense::GreaterEqual;
        i += 2;
      } else {
        t.sense = Sense::Equal;
        i += 1;
      }
    } else if (c == ':') {
      t.kind = TokKind::Colon;
      ++i;
    } else if (c == '+') {
      t.kind = TokKind::Plus;
      ++i;
    } else if (c == '-') {
      t.kind = TokKind::Minus;
      ++i;
    } else {
      throw IoError(std::string("unexpected character '") + c + "'", line);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  out.push_back(end);
  return out;
}

enum class Keyword {
  None,
  Minimize,
  Maximize,
  SubjectTo,
  Bounds,
  General,
  Binary,
  End
};

const std::set<std::string> kReserved = {
    "min",     "max",      "minimize", "maximize", "minimise", "maximise",
    "minimum", "maximum",  "subject",  "such",     "st",       "s.t.",
    "st.",     "bounds",   "bound",    "general",  "generals", "gen",
    "integer", "integers", "binary",   "binaries", "bin",      "end",
    "free",    "inf",      "infinity", "to",       "that"};

class LpReader {
 public:
  explicit LpReader(std::string_view content) : tokens_(tokenize(content)) {}

  Instance read();

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw IoError(what, peek().line);
  }

  // Recognizes a section keyword at the current position and returns how
  // many tokens it spans.
  std::pair<Keyword, int> keywordAt() const {
    const Token& t = peek();
    if (t.kind != TokKind::Ident) return {Keyword::None, 0};
    // A label "name:" is never a keyword.
    if (peek(1).kind == TokKind::Colon) return {Keyword::None, 0};
    std::string w = toLower(t.text);
    if (w == "min" || w == "minimize" || w == "minimise" || w == "minimum") {
      return {Keyword::Minimize, 1};
    }
    if (w == "max" || w == "maximize" || w == "maximise" || w == "maximum") {
      return {Keyword::Maximize, 1};
    }
    if (w == "st" || w == "s.t." || w == "st.") return {Keyword::SubjectTo, 1};
    if (w == "subject" && peek(1).kind == TokKind::Ident &&
        toLower(peek(1).text) == "to") {
      return {Keyword::SubjectTo, 2};
    }
    if (w == "such" && peek(1).kind == TokKind::Ident &&
        toLower(peek(1).text) == "that") {
      return {Keyword::SubjectTo, 2};
    }
    if (w == "bounds" || w == "bound") return {Keyword::Bounds, 1};
    if (w == "general" || w == "generals" || w == "gen" || w == "integer" ||
        w == "integers") {
      return {Keyword::General, 1};
    }
    if (w == "binary" || w == "binaries" || w == "bin") {
      return {Keyword::Binary, 1};
    }
    if (w == "end") return {Keyword::End, 1};
    return {Keyword::None, 0};
  }

  int variable(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int j = static_cast<int>(variables_.size());
    Variable v;
    v.name = name;
    variables_.push_back(std::move(v));
    index_.emplace(name, j);
    return j;
  }

  Rational number(const Token& t) const {
    try {
      return Rational::parse(t.text);
    } catch (const RationalParseError& e) {
      throw IoError(e.what(), t.line);
    } catch (const ArithmeticError& e) {
      throw IoError(e.what(), t.line);
    }
  }

  bool isInfinity(const Token& t) const {
    if (t.kind != TokKind::Ident) return false;
    std::string w = toLower(t.text);
    return w == "inf" || w == "infinity";
  }

  // [sign]* (number | inf)
  ExtRational boundValue() {
    bool negative = false;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      if (next().kind == TokKind::Minus) negative = !negative;
    }
    if (isInfinity(peek())) {
      next();
      return negative ? ExtRational::negInf() : ExtRational::posInf();
    }
    if (peek().kind != TokKind::Number) error("expected a number");
    Rational v = number(next());
    return ExtRational(negative ? -v : v);
  }

  // Parses a linear expression until a sense, a section keyword or the end.
  // Constants accumulate into `constant`.
  void expression(SparseVector& terms, Rational& constant, bool stopAtKeyword);

  void objectiveSection(ObjectiveSense sense);
  void constraintsSection();
  void boundsSection();
  void integerSection(bool binary);

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Variable> variables_;
  std::unordered_map<std::string, int> index_;
  std::vector<LinearConstraint> constraints_;
  SparseVector objective_;
  Rational offset_;
  ObjectiveSense sense_ = ObjectiveSense::Minimize;
};

void LpReader::expression(SparseVector& terms, Rational& constant,
                          bool stopAtKeyword) {
  bool first = true;
  while (true) {
    const Token& t = peek();
    if (t.kind == TokKind::Sense || t.kind == TokKind::End) return;
    if (stopAtKeyword && keywordAt().first != Keyword::None) return;
    if (t.kind == TokKind::Ident && peek(1).kind == TokKind::Colon) return;

    bool negative = false;
    bool sawSign = false;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      sawSign = true;
      if (next().kind == TokKind::Minus) negative = !negative;
    }
    if (!first && !sawSign) error("expected '+' or '-' between terms");
    first = false;

    Rational coef(1);
    bool haveNumber = false;
    if (peek().kind == TokKind::Number) {
      coef = number(next());
      haveNumber = true;
    }
    if (negative) coef = -coef;
    if (peek().kind == TokKind::Ident && !isInfinity(peek()) &&
        peek(1).kind != TokKind::Colon &&
        !(stopAtKeyword && keywordAt().first != Keyword::None)) {
      terms.push_back({variable(next().text), coef});
    } else if (haveNumber) {
      constant += coef;
    } else {
      error("expected a term");
    }
  }
}

void LpReader::objectiveSection(ObjectiveSense sense) {
  sense_ = sense;
  if (peek().kind == TokKind::Ident && peek(1).kind == TokKind::Colon) {
    next();
    next();
  }
  Rational constant;
  expression(objective_, constant, true);
  if (peek().kind == TokKind::Sense) error("unexpected relation in objective");
  offset_ = constant;
}

void LpReader::constraintsSection() {
  while (true) {
    if (peek().kind == TokKind::End) return;
    if (keywordAt().first != Keyword::None) return;
    LinearConstraint row;
    if (peek().kind == TokKind::Ident && peek(1).kind == TokKind::Colon) {
      row.name = next().text;
      next();
    }
    Rational constant;
    expression(row.coefficients, constant, false);
    if (peek().kind != TokKind::Sense) error("expected a relation");
    row.sense = next().sense;
    ExtRational rhs = boundValue();
    if (!rhs.isFinite()) error("infinite right-hand side");
    row.rhs = rhs.value() - constant;
    constraints_.push_back(std::move(row));
  }
}

void LpReader::boundsSection() {
  while (true) {
    if (peek().kind == TokKind::End) return;
    if (keywordAt().first != Keyword::None) return;
    const Token& first = peek();
    if (first.kind == TokKind::Ident && !isInfinity(first)) {
      int j = variable(next().text);
      Variable& v = variables_[j];
      if (peek().kind == TokKind::Ident && toLower(peek().text) == "free") {
        next();
        v.lower = ExtRational::negInf();
        v.upper = ExtRational::posInf();
        continue;
      }
      if (peek().kind != TokKind::Sense) error("expected a relation or 'free'");
      Sense s = next().sense;
      ExtRational value = boundValue();
      if (s == Sense::LessEqual || s == Sense::Equal) v.upper = value;
      if (s == Sense::GreaterEqual || s == Sense::Equal) v.lower = value;
      continue;
    }
    // value sense x [sense value]
    ExtRational left = boundValue();
    if (peek().kind != TokKind::Sense) error("expected a relation");
    Sense s1 = next().sense;
    if (peek().kind != TokKind::Ident || isInfinity(peek())) {
      error("expected a variable name");
    }
    int j = variable(next().text);
    Variable& v = variables_[j];
    if (s1 == Sense::LessEqual || s1 == Sense::Equal) v.lower = left;
    if (s1 == Sense::GreaterEqual || s1 == Sense::Equal) v.upper = left;
    if (peek().kind == TokKind::Sense) {
      Sense s2 = next().sense;
      ExtRational right = boundValue();
      if (s2 == Sense::LessEqual || s2 == Sense::Equal) v.upper = right;
      if (s2 == Sense::GreaterEqual || s2 == Sense::Equal) v.lower = right;
    }
  }
}

void LpReader::integerSection(bool binary) {
  while (peek().kind == TokKind::Ident && keywordAt().first == Keyword::None) {
    int j = variable(next().text);
    variables_[j].integral = true;
    if (binary) {
      variables_[j].lower = Rational(0);
      variables_[j].upper = Rational(1);
    }
  }
  if (peek().kind != TokKind::End && keywordAt().first == Keyword::None) {
    error("expected a variable name");
  }
}

Instance LpReader::read() {
  bool sawObjective = false;
  while (peek().kind != TokKind::End) {
    auto [kw, span] = keywordAt();
    if (kw == Keyword::None) error("expected a section keyword");
    for (int k = 0; k < span; ++k) next();
    switch (kw) {
      case Keyword::Minimize:
      case Keyword::Maximize:
        if (sawObjective) error("objective given twice");
        sawObjective = true;
        objectiveSection(kw == Keyword::Maximize ? ObjectiveSense::Maximize
                                                 : ObjectiveSense::Minimize);
        break;
      case Keyword::SubjectTo:
        constraintsSection();
        break;
      case Keyword::Bounds:
        boundsSection();
        break;
      case Keyword::General:
        integerSection(false);
        break;
      case Keyword::Binary:
        integerSection(true);
        break;
      case Keyword::End:
        pos_ = tokens_.size() - 1;
        break;
      case Keyword::None:
        break;
    }
  }
  try {
    return Instance::build(std::move(variables_), std::move(constraints_),
                           std::move(objective_), sense_, offset_);
  } catch (const ModelError& e) {
    throw IoError(e.what(), 0);
  }
}

bool lpSafe(const std::string& name) {
  if (name.empty() || !identStart(name[0])) return false;
  for (char c : name) {
    if (!identChar(c)) return false;
  }
  return kReserved.count(toLower(name)) == 0;
}

std::string signedTerm(const Rational& coef, const std::string& var,
                       bool first) {
  std::string out;
  if (coef.sign() < 0) {
    out = first ? "-" : " -";
  } else if (!first) {
    out = " +";
  }
  std::string mag = coef.abs().str();
  if (!first || coef.sign() < 0) out += " ";
  out += mag;
  if (!var.empty()) out += " " + var;
  return out;
}

}  // namespace

Instance readLp(std::string_view content) { return LpReader(content).read(); }

std::string writeLp(const Instance& instance) {
  const int n = instance.numVariables();
  const int m = instance.numConstraints();
  bool renameColumns = false;
  for (const auto& v : instance.variables()) {
    if (!lpSafe(v.name)) renameColumns = true;
  }
  bool renameRows = false;
  for (const auto& c : instance.constraints()) {
    if (!lpSafe(c.name)) renameRows = true;
  }
  auto col = [&](int j) {
    return renameColumns ? "x" + std::to_string(j) : instance.variable(j).name;
  };
  auto rowName = [&](int i) {
    return renameRows ? "c" + std::to_string(i) : instance.constraint(i).name;
  };
  std::vector<Rational> obj(n);
  for (const auto& t : instance.objective()) obj[t.index] = t.value;
  // The objective row name must not collide with a constraint name.
  std::set<std::string> used;
  for (int i = 0; i < m; ++i) used.insert(rowName(i));
  std::string objName = "obj";
  for (int k = 1; used.count(objName); ++k) objName = "obj" + std::to_string(k);

  std::ostringstream out;
  out << (instance.objectiveSense() == ObjectiveSense::Maximize ? "Maximize"
                                                                 : "Minimize")
      << "\n " << objName << ":";
  bool first = true;
  for (int j = 0; j < n; ++j) {
    out << " " << signedTerm(obj[j], col(j), first);
    first = false;
    if (j % 8 == 7 && j + 1 < n) out << "\n  ";
  }
  if (!instance.objectiveOffset().isZero() || n == 0) {
    out << " " << signedTerm(instance.objectiveOffset(), "", first);
  }
  out << "\nSubject To\n";
  for (int i = 0; i < m; ++i) {
    const auto& c = instance.constraint(i);
    out << " " << rowName(i) << ":";
    if (c.coefficients.empty()) {
      out << " 0";
    } else {
      bool firstTerm = true;
      int k = 0;
      for (const auto& t : c.coefficients) {
        out << " " << signedTerm(t.value, col(t.index), firstTerm);
        firstTerm = false;
        if (++k % 8 == 0 && k < static_cast<int>(c.coefficients.size())) {
          out << "\n  ";
        }
      }
    }
    out << " " << toString(c.sense) << " " << c.rhs.str() << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < n; ++j) {
    const auto& v = instance.variable(j);
    if (v.lower.isNegInf() && v.upper.isPosInf()) {
      out << " " << col(j) << " free\n";
    } else if (v.lower.isFinite() && v.upper.isFinite() &&
               v.lower == v.upper) {
      out << " " << col(j) << " = " << v.lower.str() << "\n";
    } else {
      out << " " << (v.lower.isNegInf() ? "-inf" : v.lower.str()) << " <= "
          << col(j) << " <= " << (v.upper.isPosInf() ? "+inf" : v.upper.str())
          << "\n";
    }
  }
  bool anyInt = false;
  for (const auto& v : instance.variables()) anyInt = anyInt || v.integral;
  if (anyInt) {
    out << "General\n";
    for (int j = 0; j < n; ++j) {
      if (instance.variable(j).integral) out << " " << col(j) << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace exactmip::detail
