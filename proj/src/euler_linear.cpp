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

#include "alphabound/euler_linear.hpp"

#include <algorithm>

namespace alphabound {
namespace {

constexpr unsigned kInitialTerms = 16;

Rational partial_e(unsigned terms) {
  Rational sum = 0;
  BigInt fact = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) fact *= k;
    sum += Rational(BigInt(1), fact);
  }
  return sum;
}

}  // namespace

Interval e_enclosure(unsigned terms) {
  terms = std::max(terms, 1u);
  const Rational lo = partial_e(terms);
  return {lo, lo + Rational(BigInt(2), factorial(terms + 1))};
}

Interval inverse_e_enclosure(unsigned terms) {
  const Interval e = e_enclosure(terms);
  return {1 / e.hi, 1 / e.lo};
}

unsigned terms_for_width(const Rational& max_width) {
  // width(1/e) < width(e) = 2/(K+1)! because S_K >= 1.
  unsigned k = 1;
  BigInt fact = 2;
  while (Rational(BigInt(2), fact) >= max_width) {
    ++k;
    fact *= (k + 1);
  }
  return k;
}

EulerLinear& EulerLinear::operator+=(const EulerLinear& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EulerLinear& EulerLinear::operator-=(const EulerLinear& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EulerLinear& EulerLinear::operator*=(const Rational& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

Interval EulerLinear::enclose(unsigned terms) const {
  if (b_ == 0) return {a_, a_};
  const Interval inv = inverse_e_enclosure(terms);
  Rational x = a_ + b_ * inv.lo;
  Rational y = a_ + b_ * inv.hi;
  if (b_ < 0) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

Interval EulerLinear::enclose_within(const Rational& max_width) const {
  if (b_ == 0) return {a_, a_};
  return enclose(terms_for_width(max_width / boost::multiprecision::abs(b_)));
}

int EulerLinear::sign() const {
  if (b_ == 0) return a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  // a + b/e is irrational here, so refinement terminates.
  for (unsigned terms = kInitialTerms;; terms *= 2) {
    const Interval box = enclose(terms);
    if (box.lo > 0) return 1;
    if (box.hi < 0) return -1;
  }
}

std::strong_ordering operator<=>(const EulerLinear& x, const EulerLinear& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string EulerLinear::to_decimal(int digits) const {
  if (b_ == 0) return alphabound::to_decimal(a_, digits);
  for (unsigned terms = kInitialTerms;; terms *= 2) {
    const Interval box = enclose(terms);
    std::string lo = alphabound::to_decimal(box.lo, digits);
    if (lo == alphabound::to_decimal(box.hi, digits)) return lo;
  }
}

double EulerLinear::to_double() const {
  return std::stod(to_decimal(20));
}

std::string EulerLinear::to_string() const {
  if (b_ == 0) return alphabound::to_string(a_);
  const Rational magnitude = boost::multiprecision::abs(b_);
  std::string b_text;
  if (magnitude == 1) {
    b_text = "1/e";
  } else if (denominator(magnitude) == 1) {
    b_text = alphabound::to_string(magnitude) + "/e";
  } else {
    b_text = "(" + alphabound::to_string(magnitude) + ")/e";
  }
  if (a_ == 0) return (b_ < 0 ? "-" : "") + b_text;
  return alphabound::to_string(a_) + (b_ < 0 ? " - " : " + ") + b_text;
}

}  // namespace alphabound
