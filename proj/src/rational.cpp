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

#include "alphabound/rational.hpp"

#include <charconv>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  // den > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace

std::string to_string(const Rational& r) {
  const BigInt& den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error("not a rational number: '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::abs(numerator(r)) * scale;
  const BigInt& den = denominator(r);
  const BigInt rounded = (2 * num + den) / (2 * den);
  std::string body = rounded.str();
  if (body.size() < static_cast<std::size_t>(digits) + 1) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  if (digits > 0) body.insert(body.size() - digits, 1, '.');
  if (r < 0 && rounded != 0) body.insert(0, 1, '-');
  return body;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt ceil(const Rational& r) {
  return -floor_div(-numerator(r), denominator(r));
}

}  // namespace alphabound
