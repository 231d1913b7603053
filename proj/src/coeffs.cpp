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

#include "alphabound/coeffs.hpp"

#include <algorithm>
#include <string>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

void require_delta(int delta) {
  if (delta < 3) {
    throw Error("coefficients are defined only for Δ ≥ 3 (got " +
                std::to_string(delta) + ")");
  }
}

// i(i+1)⋯k
BigInt rising_product(int i, int k) {
  BigInt out = 1;
  for (int t = i; t <= k; ++t) out *= t;
  return out;
}

}  // namespace

std::string_view to_string(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::kCorollary1:
      return "corollary1";
    case CoeffKind::kTheorem2:
      return "theorem2";
    case CoeffKind::kTheorem5:
      return "theorem5";
  }
  return "unknown";
}

RationalSequence c_sequence(int delta) {
  require_delta(delta);
  std::vector<Rational> c(delta);
  c[delta - 1] = make_rational(1, delta);
  for (int i = delta - 1; i >= 1; --i) {
    c[i - 1] = (1 - c[i]) / i;
  }
  return {CoeffKind::kTheorem2, delta, std::move(c)};
}

Rational c_explicit(int i, int delta) {
  require_delta(delta);
  if (i < 1 || i > delta) {
    throw Error("coefficient index " + std::to_string(i) + " outside 1.." +
                std::to_string(delta));
  }
  if (i >= delta - 1) return make_rational(1, delta);
  const bool same_parity = (delta - i) % 2 == 0;
  const int terms = same_parity ? (delta - i - 2) / 2 : (delta - i - 3) / 2;
  Rational value = make_rational(1, i + 1);
  for (int j = 1; j <= terms; ++j) {
    value += Rational(BigInt(i + 2 * j), rising_product(i, i + 2 * j + 1));
  }
  const BigInt tail_num = same_parity ? BigInt(1) : BigInt(delta - 1);
  value += Rational(tail_num, rising_product(i, delta));
  return value;
}

RationalSequence corollary1_sequence(int delta, const Rational& c_delta) {
  require_delta(delta);
  const Rational cap = make_rational(2, 2 * delta + 1);
  if (c_delta <= 0 || c_delta > cap) {
    throw Error("c_Δ must lie in (0, " + to_string(cap) + "], got " +
                to_string(c_delta));
  }
  std::vector<Rational> c(delta);
  c[delta - 1] = c_delta;
  for (int i = delta - 1; i >= 1; --i) {
    c[i - 1] = std::min<Rational>((1 - c[i]) / i, make_rational(2, 2 * i + 1));
  }
  return {CoeffKind::kCorollary1, delta, std::move(c)};
}

EulerSequence d_sequence(int delta_prime) {
  require_delta(delta_prime);
  std::vector<EulerLinear> d;
  d.reserve(delta_prime);
  d.emplace_back(Rational(1), Rational(-1));
  for (int i = 1; i < delta_prime; ++i) {
    d.push_back(EulerLinear(Rational(1)) - d.back() * Rational(i));
  }
  return {CoeffKind::kTheorem5, delta_prime, std::move(d)};
}

EulerLinear d_closed_form(int i) {
  if (i < 1) throw Error("d_i is defined for i ≥ 1 (got " + std::to_string(i) + ")");
  Rational alternating = 0;
  BigInt fact = 1;
  for (int j = 0; j <= i + 1; ++j) {
    if (j > 0) fact *= j;
    alternating += Rational(BigInt(j % 2 == 0 ? 1 : -1), fact);
  }
  const Rational scale(factorial(static_cast<unsigned>(i - 1)));
  const Rational head = make_rational(1, i + 1);
  if (i % 2 == 0) return {head - scale * alternating, scale};
  return {head + scale * alternating, -scale};
}

}  // namespace alphabound
