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

#ifndef EXACTMIP_RATIONAL_HPP_
#define EXACTMIP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactmip {

using Integer = mpz_class;

/// Raised on division by zero and on undefined extended-real operations
/// such as inf - inf or 0 * inf.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed numeric literal. position() is the zero-based offset of the
/// first offending character.
class RationalParseError : public std::invalid_argument {
 public:
  RationalParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arbitrary-precision fraction, always kept in canonical form
/// (positive denominator, gcd 1, zero as 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long long value);
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(const mpq_class& value);

  /// Accepts integer, "p/q", decimal and decimal-with-exponent literals,
  /// each with an optional sign. Decimals are expanded exactly.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool isZero() const { return sign() == 0; }
  bool isInteger() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  /// r - floor(r), in [0, 1).
  Rational fractionalPart() const;
  Rational abs() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor or ceiling as a free function, matching how callers pick a mode.
enum class RoundingMode { Floor, Ceil };
Integer floorCeil(const Rational& r, RoundingMode mode);

/// Three-way comparison result for arith(cmp).
enum class Ordering { Less, Equal, Greater };
Ordering compare(const Rational& a, const Rational& b);

/// Extended rational: a finite Rational or one of the two infinities.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(const Rational& value) : value_(value) {}
  ExtRational(int value) : value_(value) {}

  static ExtRational posInf() { return ExtRational(Kind::PosInf); }
  static ExtRational negInf() { return ExtRational(Kind::NegInf); }
  /// Accepts every Rational literal plus inf, +inf, -inf, infinity
  /// (case-insensitive).
  static ExtRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool isFinite() const { return kind_ == Kind::Finite; }
  bool isPosInf() const { return kind_ == Kind::PosInf; }
  bool isNegInf() const { return kind_ == Kind::NegInf; }

  /// Throws ArithmeticError when not finite.
  const Rational& value() const;

  /// Canonical rational text, or "inf" / "-inf".
  std::string str() const;

  ExtRational operator-() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b) {
    return a + (-b);
  }
  /// Scalar times extended value; 0 * inf is an error.
  friend ExtRational operator*(const Rational& scalar, const ExtRational& x);

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace exactmip

#endif  // EXACTMIP_RATIONAL_HPP_
