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

#ifndef ALPHABOUND_COEFFS_HPP_
#define ALPHABOUND_COEFFS_HPP_

#include <string_view>
#include <vector>

#include "alphabound/euler_linear.hpp"
#include "alphabound/rational.hpp"

namespace alphabound {

enum class CoeffKind {
  kCorollary1,  // min-clipped sequence admissible for the Kelly-Postle weights
  kTheorem2,    // c_Δ = 1/Δ, i·c_i + c_{i+1} = 1
  kTheorem5,    // d_1 = 1 - 1/e, d_{i+1} = 1 - i·d_i
};

std::string_view to_string(CoeffKind kind);

// Coefficients indexed 1..delta.
template <class T>
struct CoeffSequence {
  CoeffKind kind;
  int delta;
  std::vector<T> values;  // values[0] holds index 1

  const T& operator[](int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
  int size() const noexcept { return static_cast<int>(values.size()); }
};

using RationalSequence = CoeffSequence<Rational>;
using EulerSequence = CoeffSequence<EulerLinear>;

// Backward recursion c_Δ = 1/Δ, c_i = (1 - c_{i+1})/i. Requires delta >= 3.
RationalSequence c_sequence(int delta);

// Closed forms for c_i: for i ≡ Δ (mod 2), i ≤ Δ-2,
//   1/(i+1) + Σ_{j=1}^{(Δ-i-2)/2} (i+2j)/(i(i+1)⋯(i+2j+1)) + 1/(i(i+1)⋯Δ);
// for i ≡ Δ-1 (mod 2), i ≤ Δ-3, the same sum up to (Δ-i-3)/2 with tail
// (Δ-1)/(i(i+1)⋯Δ); and 1/Δ for i ∈ {Δ-1, Δ}. Requires 1 ≤ i ≤ Δ, Δ ≥ 3.
Rational c_explicit(int i, int delta);

// c_i = min((1 - c_{i+1})/i, 2/(2i+1)) from a given c_Δ in (0, 2/(2Δ+1)].
RationalSequence corollary1_sequence(int delta, const Rational& c_delta);

// Forward recursion d_1 = 1 - 1/e, d_{i+1} = 1 - i·d_i. Requires
// delta_prime >= 3.
EulerSequence d_sequence(int delta_prime);

// d_i = 1/(i+1) ± (i-1)!·(1/e - Σ_{j=0}^{i+1} (-1)^j/j!), sign + for even i
// and - for odd i. Requires i >= 1.
EulerLinear d_closed_form(int i);

}  // namespace alphabound

#endif  // ALPHABOUND_COEFFS_HPP_
