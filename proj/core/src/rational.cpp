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

#include "exactmip/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace exactmip {

namespace {

// Exponents beyond this magnitude are rejected rather than expanded.
constexpr long kMaxExponent = 100000;

bool isDigit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(const std::string& text, std::size_t pos,
                       const char* what) {
  throw RationalParseError("invalid rational literal '" + text + "' at " +
                               std::to_string(pos) + ": " + what,
                           pos);
}

Integer pow10(long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

bool equalsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

Rational::Rational(long long value) {
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw ArithmeticError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view view) {
  const std::string text(view);
  std::size_t pos = 0;
  const std::size_t n = text.size();
  if (n == 0) fail(text, 0, "empty");

  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string digits;
  std::size_t intStart = pos;
  while (pos < n && isDigit(text[pos])) digits.push_back(text[pos++]);
  bool haveInt = pos > intStart;

  // p/q form
  if (pos < n && text[pos] == '/') {
    if (!haveInt) fail(text, pos, "missing numerator");
    ++pos;
    std::size_t denStart = pos;
    std::string den;
    while (pos < n && isDigit(text[pos])) den.push_back(text[pos++]);
    if (pos == denStart) fail(text, pos, "missing denominator");
    if (pos != n) fail(text, pos, "trailing characters");
    Integer num(digits);
    Integer d(den);
    if (d == 0) throw ArithmeticError("zero denominator in '" + text + "'");
    if (negative) num = -num;
    return Rational(num, d);
  }

  long fracDigits = 0;
  bool haveFrac = false;
  if (pos < n && text[pos] == '.') {
    ++pos;
    std::size_t fracStart = pos;
    while (pos < n && isDigit(text[pos])) digits.push_back(text[pos++]);
    fracDigits = static_cast<long>(pos - fracStart);
    haveFrac = fracDigits > 0;
  }
  if (!haveInt && !haveFrac) fail(text, pos, "expected digits");

  long exponent = 0;
  if (pos < n && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool expNegative = false;
    if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
      expNegative = text[pos] == '-';
      ++pos;
    }
    std::size_t expStart = pos;
    while (pos < n && isDigit(text[pos])) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > kMaxExponent) fail(text, pos, "exponent too large");
      ++pos;
    }
    if (pos == expStart) fail(text, pos, "missing exponent digits");
    if (expNegative) exponent = -exponent;
  }
  if (pos != n) fail(text, pos, "trailing characters");

  Integer mantissa(digits);
  if (negative) mantissa = -mantissa;
  long shift = exponent - fracDigits;
  if (shift >= 0) return Rational(Integer(mantissa * pow10(shift)));
  return Rational(mantissa, pow10(-shift));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::fractionalPart() const {
  return *this - Rational(floor());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.isZero()) throw ArithmeticError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer floorCeil(const Rational& r, RoundingMode mode) {
  return mode == RoundingMode::Floor ? r.floor() : r.ceil();
}

Ordering compare(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

ExtRational ExtRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (equalsIgnoreCase(body, "inf") || equalsIgnoreCase(body, "infinity")) {
    return negative ? negInf() : posInf();
  }
  return ExtRational(Rational::parse(text));
}

const Rational& ExtRational::value() const {
  if (!isFinite()) throw ArithmeticError("value of an infinite ExtRational");
  return value_;
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    case Kind::Finite:
      break;
  }
  return value_.str();
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return posInf();
    case Kind::PosInf:
      return negInf();
    case Kind::Finite:
      break;
  }
  return ExtRational(-value_);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.isFinite() && b.isFinite()) return ExtRational(a.value_ + b.value_);
  if ((a.isPosInf() && b.isNegInf()) || (a.isNegInf() && b.isPosInf())) {
    throw ArithmeticError("inf - inf is undefined");
  }
  return a.isFinite() ? b : a;
}

ExtRational operator*(const Rational& scalar, const ExtRational& x) {
  if (x.isFinite()) return ExtRational(scalar * x.value_);
  if (scalar.isZero()) throw ArithmeticError("0 * inf is undefined");
  return scalar.sign() > 0 ? x : -x;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.isFinite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  auto rank = [](ExtRational::Kind k) {
    switch (k) {
      case ExtRational::Kind::NegInf:
        return 0;
      case ExtRational::Kind::Finite:
        return 1;
      case ExtRational::Kind::PosInf:
        return 2;
    }
    return 1;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (!a.isFinite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
  return os << r.str();
}

}  // namespace exactmip
