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

// Deliberately independent of the solver: only the rational layer is used.

#include "exactmip/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exactmip/rational.hpp"

namespace exactmip {

namespace {

struct Reject {
  std::string reason;
  int line;
};

struct Token {
  std::string_view text;
  int line;
};

enum class RowSense { G, L, E };

struct Row {
  std::map<int, Rational> coef;
  RowSense sense = RowSense::G;
  Rational rhs;
  int line = 0;
};

bool isContradiction(const Row& r) {
  if (!r.coef.empty()) return false;
  if (r.sense == RowSense::G) return r.rhs.sign() > 0;
  if (r.sense == RowSense::L) return r.rhs.sign() < 0;
  return !r.rhs.isZero();
}

// Does `derived` imply `stated`?
bool dominates(const Row& derived, const Row& stated) {
  if (isContradiction(derived)) return true;
  if (derived.sense != stated.sense || derived.coef != stated.coef) {
    return false;
  }
  switch (stated.sense) {
    case RowSense::G:
      return derived.rhs >= stated.rhs;
    case RowSense::L:
      return derived.rhs <= stated.rhs;
    case RowSense::E:
      return derived.rhs == stated.rhs;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view content) {
    int line = 1;
    std::size_t i = 0;
    while (i < content.size()) {
      char c = content[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        std::size_t j = i;
        while (j < content.size() &&
               !std::isspace(static_cast<unsigned char>(content[j]))) {
          ++j;
        }
        tokens_.push_back({content.substr(i, j - i), line});
        i = j;
      }
    }
    lastLine_ = line;
  }

  bool done() const { return pos_ >= tokens_.size(); }
  int line() const {
    return done() ? lastLine_ : tokens_[pos_].line;
  }

  std::string_view next(const char* what) {
    if (done()) fail(std::string("unexpected end of file, expected ") + what);
    return tokens_[pos_++].text;
  }

  void expect(std::string_view word) {
    int l = line();
    std::string_view t = next(std::string(word).c_str());
    if (t != word) {
      throw Reject{"expected '" + std::string(word) + "', found '" +
                       std::string(t) + "'",
                   l};
    }
  }

  long count(const char* what) {
    int l = line();
    std::string_view t = next(what);
    long v = 0;
    if (t.empty() || t.size() > 9) throw Reject{std::string("bad ") + what, l};
    for (char c : t) {
      if (c < '0' || c > '9') throw Reject{std::string("bad ") + what, l};
      v = v * 10 + (c - '0');
    }
    return v;
  }

  long index(long limit, const char* what) {
    int l = line();
    long v = count(what);
    if (v >= limit) {
      throw Reject{std::string(what) + " " + std::to_string(v) +
                       " out of range",
                   l};
    }
    return v;
  }

  Rational rational() {
    int l = line();
    std::string_view t = next("number");
    try {
      return Rational::parse(t);
    } catch (const std::exception&) {
      throw Reject{"bad number '" + std::string(t) + "'", l};
    }
  }

  ExtRational extRational() {
    int l = line();
    std::string_view t = next("number");
    try {
      return ExtRational::parse(t);
    } catch (const std::exception&) {
      throw Reject{"bad number '" + std::string(t) + "'", l};
    }
  }

  RowSense sense(bool allowEqual) {
    int l = line();
    std::string_view t = next("sense");
    if (t == "G") return RowSense::G;
    if (t == "L") return RowSense::L;
    if (t == "E" && allowEqual) return RowSense::E;
    throw Reject{"bad sense '" + std::string(t) + "'", l};
  }

  std::map<int, Rational> sparse(long n) {
    int l = line();
    long nnz = count("nonzero count");
    std::map<int, Rational> out;
    int previous = -1;
    for (long k = 0; k < nnz; ++k) {
      int j = static_cast<int>(index(n, "variable index"));
      Rational v = rational();
      if (j <= previous) {
        throw Reject{"sparse indices must be strictly increasing", l};
      }
      previous = j;
      if (v.isZero()) throw Reject{"explicit zero coefficient", l};
      out.emplace(j, std::move(v));
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& reason) {
    throw Reject{reason, line()};
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int lastLine_ = 1;
};

class Checker {
 public:
  explicit Checker(std::string_view content) : p_(content) {}

  void run() {
    p_.expect("VER");
    int versionLine = p_.line();
    std::string_view version = p_.next("version");
    if (version.substr(0, 2) != "1.") {
      throw Reject{"unsupported version '" + std::string(version) + "'",
                   versionLine};
    }
    parseVariables();
    parseObjective();
    parseConstraints();
    parseGoal();
    parseSolutions();
    parseDerivations();
    if (!p_.done()) p_.fail("trailing content after derivations");
    checkGoal();
  }

 private:
  void parseVariables() {
    p_.expect("VAR");
    n_ = p_.count("variable count");
    for (long j = 0; j < n_; ++j) p_.next("variable name");
    integral_.assign(n_, false);
    p_.expect("INT");
    long k = p_.count("integer count");
    for (long i = 0; i < k; ++i) {
      integral_[p_.index(n_, "variable index")] = true;
    }
  }

  void parseObjective() {
    p_.expect("OBJ");
    int l = p_.line();
    std::string_view s = p_.next("objective sense");
    if (s != "min") throw Reject{"objective sense must be min", l};
    objective_ = p_.sparse(n_);
  }

  void parseConstraints() {
    p_.expect("CON");
    long m = p_.count("constraint count");
    for (long i = 0; i < m; ++i) {
      Row r;
      r.line = p_.line();
      p_.next("constraint name");
      r.sense = p_.sense(true);
      r.rhs = p_.rational();
      r.coef = p_.sparse(n_);
      rows_.push_back(std::move(r));
      assumptions_.emplace_back();
      isAsm_.push_back(false);
    }
    numConstraints_ = static_cast<int>(m);
  }

  void parseGoal() {
    p_.expect("RTP");
    goalLine_ = p_.line();
    std::string_view kind = p_.next("goal");
    if (kind == "infeas") {
      infeasibleGoal_ = true;
    } else if (kind == "range") {
      lower_ = p_.extRational();
      upper_ = p_.extRational();
      if (lower_.isPosInf() || upper_.isNegInf() || upper_ < lower_) {
        throw Reject{"empty goal range", goalLine_};
      }
    } else {
      throw Reject{"unknown goal '" + std::string(kind) + "'", goalLine_};
    }
  }

  void parseSolutions() {
    p_.expect("SOL");
    long s = p_.count("solution count");
    for (long k = 0; k < s; ++k) {
      int l = p_.line();
      p_.next("solution name");
      auto x = p_.sparse(n_);
      checkSolution(x, l);
    }
    if (infeasibleGoal_ && s > 0) {
      throw Reject{"solution given for an infeasibility goal", goalLine_};
    }
  }

  static Rational activity(const std::map<int, Rational>& a,
                           const std::map<int, Rational>& x) {
    Rational sum;
    for (const auto& [j, v] : a) {
      auto it = x.find(j);
      if (it != x.end()) sum += v * it->second;
    }
    return sum;
  }

  void checkSolution(const std::map<int, Rational>& x, int line) {
    for (const auto& [j, v] : x) {
      if (integral_[j] && !v.isInteger()) {
        throw Reject{"solution value of integer variable " +
                         std::to_string(j) + " is fractional",
                     line};
      }
    }
    for (int i = 0; i < numConstraints_; ++i) {
      const Row& r = rows_[i];
      Rational act = activity(r.coef, x);
      bool ok = r.sense == RowSense::G   ? act >= r.rhs
                : r.sense == RowSense::L ? act <= r.rhs
                                         : act == r.rhs;
      if (!ok) {
        throw Reject{"solution violates constraint " + std::to_string(i),
                     line};
      }
    }
    Rational value = activity(objective_, x);
    if (!best_ || value < *best_) best_ = value;
  }

  // Sum of multiplier * row, checking signs for a derivation of `sense`.
  Row combine(RowSense sense, int self, int line,
              std::vector<int>* assumptions) {
    long k = p_.count("multiplier count");
    Row out;
    out.sense = sense;
    for (long t = 0; t < k; ++t) {
      int ref = static_cast<int>(p_.index(self, "reference"));
      Rational mult = p_.rational();
      const Row& r = rows_[ref];
      if (r.sense != RowSense::E && !mult.isZero()) {
        bool agree = (r.sense == RowSense::G) == (sense == RowSense::G);
        if (agree != (mult.sign() > 0)) {
          throw Reject{"multiplier of reference " + std::to_string(ref) +
                           " has the wrong sign",
                       line};
        }
      }
      for (const auto& [j, v] : r.coef) out.coef[j] += mult * v;
      out.rhs += mult * r.rhs;
      mergeInto(assumptions, assumptions_[ref]);
    }
    for (auto it = out.coef.begin(); it != out.coef.end();) {
      it = it->second.isZero() ? out.coef.erase(it) : std::next(it);
    }
    return out;
  }

  static void mergeInto(std::vector<int>* into, const std::vector<int>& add) {
    std::vector<int> merged;
    std::set_union(into->begin(), into->end(), add.begin(), add.end(),
                   std::back_inserter(merged));
    *into = std::move(merged);
  }

  bool isIntegralSplit(const Row& r) const {
    if (!r.rhs.isInteger()) return false;
    for (const auto& [j, v] : r.coef) {
      if (!integral_[j] || !v.isInteger()) return false;
    }
    return true;
  }

  void parseDerivations() {
    p_.expect("DER");
    long d = p_.count("derivation count");
    for (long k = 0; k < d; ++k) {
      const int self = static_cast<int>(rows_.size());
      Row stated;
      stated.line = p_.line();
      const int line = stated.line;
      p_.next("derivation name");
      stated.sense = p_.sense(false);
      stated.rhs = p_.rational();
      stated.coef = p_.sparse(n_);
      p_.expect("{");
      int ruleLine = p_.line();
      std::string_view rule = p_.next("rule");
      std::vector<int> assumptions;
      bool asmLine = false;
      if (rule == "asm") {
        assumptions.push_back(self);
        asmLine = true;
      } else if (rule == "lin" || rule == "rnd") {
        Row combined = combine(stated.sense, self, line, &assumptions);
        if (rule == "rnd") {
          for (const auto& [j, v] : combined.coef) {
            if (!integral_[j]) {
              throw Reject{"rounding with continuous variable " +
                               std::to_string(j),
                           line};
            }
            if (!v.isInteger()) {
              throw Reject{"rounding with fractional coefficient on " +
                               std::to_string(j),
                           line};
            }
          }
          combined.rhs = Rational(stated.sense == RowSense::G
                                      ? combined.rhs.ceil()
                                      : combined.rhs.floor());
        }
        if (!dominates(combined, stated)) {
          throw Reject{std::string(rule) +
                           " combination does not imply the stated constraint",
                       line};
        }
      } else if (rule == "uns") {
        int c1 = static_cast<int>(p_.index(self, "reference"));
        int a1 = static_cast<int>(p_.index(self, "reference"));
        int c2 = static_cast<int>(p_.index(self, "reference"));
        int a2 = static_cast<int>(p_.index(self, "reference"));
        checkSplit(a1, a2, line);
        if (!dominates(rows_[c1], stated) || !dominates(rows_[c2], stated)) {
          throw Reject{"uns child does not imply the stated constraint", line};
        }
        std::vector<int> s1 = assumptions_[c1];
        std::vector<int> s2 = assumptions_[c2];
        s1.erase(std::remove(s1.begin(), s1.end(), a1), s1.end());
        s2.erase(std::remove(s2.begin(), s2.end(), a2), s2.end());
        assumptions = s1;
        mergeInto(&assumptions, s2);
      } else {
        throw Reject{"unknown rule '" + std::string(rule) + "'", ruleLine};
      }
      p_.expect("}");
      rows_.push_back(std::move(stated));
      assumptions_.push_back(std::move(assumptions));
      isAsm_.push_back(asmLine);
    }
  }

  void checkSplit(int a1, int a2, int line) {
    if (!isAsm_[a1] || !isAsm_[a2]) {
      throw Reject{"uns assumption reference is not an asm line", line};
    }
    const Row* down = &rows_[a1];
    const Row* up = &rows_[a2];
    if (down->sense == RowSense::G) std::swap(down, up);
    if (down->sense != RowSense::L || up->sense != RowSense::G ||
        down->coef != up->coef || down->coef.empty() ||
        !isIntegralSplit(*down) || up->rhs != down->rhs + Rational(1)) {
      throw Reject{"uns assumptions do not form a split disjunction", line};
    }
  }

  void checkGoal() {
    if (!infeasibleGoal_ && upper_.isFinite()) {
      if (!best_ || *best_ > upper_.value()) {
        throw Reject{"no solution attains the upper bound", goalLine_};
      }
    }
    const int last = static_cast<int>(rows_.size()) - 1;
    if (last >= numConstraints_ && !assumptions_[last].empty()) {
      throw Reject{"final derivation depends on assumptions", rows_[last].line};
    }
    if (!infeasibleGoal_ && !lower_.isFinite()) return;
    if (last < numConstraints_) {
      throw Reject{"no derivation proves the goal", goalLine_};
    }
    const Row& r = rows_[last];
    if (infeasibleGoal_) {
      if (!isContradiction(r)) {
        throw Reject{"final derivation is not a contradiction", r.line};
      }
      return;
    }
    Row goal;
    goal.coef = objective_;
    goal.sense = RowSense::G;
    goal.rhs = lower_.value();
    if (!dominates(r, goal)) {
      throw Reject{"final derivation does not prove the lower bound", r.line};
    }
  }

  Parser p_;
  long n_ = 0;
  std::vector<bool> integral_;
  std::map<int, Rational> objective_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> assumptions_;
  std::vector<bool> isAsm_;
  int numConstraints_ = 0;
  bool infeasibleGoal_ = false;
  ExtRational lower_ = ExtRational::negInf();
  ExtRational upper_ = ExtRational::posInf();
  int goalLine_ = 0;
  std::optional<Rational> best_;
};

}  // namespace

VerifyResult verifyCertificate(std::string_view content) {
  try {
    Checker(content).run();
  } catch (const Reject& r) {
    return {false, r.reason, r.line};
  } catch (const std::exception& e) {
    return {false, e.what(), 0};
  }
  return {true, {}, 0};
}

}  // namespace exactmip
