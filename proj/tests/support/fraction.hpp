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

// A small fraction type on 128-bit integers for test oracles, kept apart
// from the library's GMP-backed Rational so the oracles share no
// arithmetic with the code under test.

#ifndef EXACTMIP_TESTS_FRACTION_HPP_
#define EXACTMIP_TESTS_FRACTION_HPP_

#include <compare>
#include <stdexcept>
#include <string>

namespace oracle {

using i128 = __int128;

class OverflowError : public std::overflow_error {
 public:
  OverflowError() : std::overflow_error("oracle fraction overflow") {}
};

class Frac {
 public:
  Frac() = default;
  Frac(long long n) : num_(n) {}
  Frac(i128 n, i128 d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool isZero() const { return num_ == 0; }
  bool isInteger() const { return den_ == 1; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    i128 g = gcd(a.den_, b.den_);
    i128 da = b.den_ / g;
    i128 db = a.den_ / g;
    return Frac(add(mul(a.num_, da), mul(b.num_, db)), mul(a.den_, da));
  }
  friend Frac operator-(const Frac& a) { return Frac(-a.num_, a.den_); }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    i128 g1 = gcd(abs(a.num_), b.den_);
    i128 g2 = gcd(abs(b.num_), a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Frac(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Frac(b.den_, b.num_);
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    i128 l = mul(a.num_, b.den_);
    i128 r = mul(b.num_, a.den_);
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" or "p/q", the same rendering the library uses.
  std::string str() const {
    std::string s = toString(num_);
    if (den_ != 1) s += "/" + toString(den_);
    return s;
  }

 private:
  static i128 abs(i128 v) { return v < 0 ? -v : v; }
  static i128 gcd(i128 a, i128 b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static i128 mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
  }
  static i128 add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
  }
  static std::string toString(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
      int d = static_cast<int>(v % 10);
      s.insert(s.begin(), static_cast<char>('0' + (d < 0 ? -d : d)));
      v /= 10;
    }
    return neg ? "-" + s : s;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    i128 g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace oracle

#endif  // EXACTMIP_TESTS_FRACTION_HPP_
