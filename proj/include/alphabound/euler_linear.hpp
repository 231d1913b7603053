// Copyright 2026 The alphabound Authors
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

#ifndef ALPHABOUND_EULER_LINEAR_HPP_
#define ALPHABOUND_EULER_LINEAR_HPP_

#include <compare>
#include <string>

#include "alphabound/rational.hpp"

namespace alphabound {

// Certified enclosures of e and 1/e from the partial sum S_K = sum_{k<=K} 1/k!
// and the tail bound 0 < e - S_K < 2/(K+1)!.
Interval e_enclosure(unsigned terms);
Interval inverse_e_enclosure(unsigned terms);

// Fewest terms K for which inverse_e_enclosure(K) is narrower than max_width.
unsigned terms_for_width(const Rational& max_width);

// The real number a + b/e with rational a and b. Because e is irrational the
// pair (a, b) is unique, so equality is componentwise and ordering is decided
// by refining an enclosure of 1/e until the sign of the difference is known.
class EulerLinear {
 public:
  EulerLinear() = default;
  EulerLinear(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static EulerLinear inverse_e() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& inverse_e_part() const noexcept { return b_; }
  bool is_rational() const { return b_ == 0; }

  EulerLinear& operator+=(const EulerLinear& o);
  EulerLinear& operator-=(const EulerLinear& o);
  EulerLinear& operator*=(const Rational& s);

  friend EulerLinear operator+(EulerLinear x, const EulerLinear& y) { return x += y; }
  friend EulerLinear operator-(EulerLinear x, const EulerLinear& y) { return x -= y; }
  friend EulerLinear operator*(EulerLinear x, const Rational& s) { return x *= s; }
  friend EulerLinear operator*(const Rational& s, EulerLinear x) { return x *= s; }
  EulerLinear operator-() const { return {-a_, -b_}; }

  friend bool operator==(const EulerLinear& x, const EulerLinear& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const EulerLinear& x, const EulerLinear& y);

  // -1, 0 or +1.
  int sign() const;
  EulerLinear abs() const { return sign() < 0 ? -*this : *this; }

  // Rational enclosure of the value using `terms` terms of the series for e.
  Interval enclose(unsigned terms) const;
  // Enclosure no wider than max_width.
  Interval enclose_within(const Rational& max_width) const;

  // Correctly rounded decimal with `digits` fractional digits (half away from
  // zero).
  std::string to_decimal(int digits = 12) const;
  double to_double() const;

  // Exact form such as "1 - 1/e", "-2 + 6/e" or "(3/4)/e".
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

}  // namespace alphabound

#endif  // ALPHABOUND_EULER_LINEAR_HPP_
