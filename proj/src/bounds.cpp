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

#include "alphabound/bounds.hpp"

#include <algorithm>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

template <class T>
T degree_sum(const Graph& g, const CoeffSequence<T>& coeffs) {
  const DegreeProfile profile = degree_profile(g);
  const int top = std::min(coeffs.size(), profile.delta_max);
  T sum{};
  for (int i = 1; i <= top; ++i) {
    const std::size_t count = profile.count(i);
    if (count != 0) sum += coeffs[i] * Rational(count);
  }
  return sum;
}

}  // namespace

Rational weighted_degree_sum(const Graph& g, const RationalSequence& coeffs) {
  return degree_sum(g, coeffs);
}

EulerLinear weighted_degree_sum(const Graph& g, const EulerSequence& coeffs) {
  return degree_sum(g, coeffs);
}

Rational bound_brooks(const Graph& g) {
  const int delta = require_class_member(g);
  return make_rational(static_cast<long long>(g.num_vertices()), delta);
}

Rational bound_theorem2(const Graph& g) {
  const int delta = require_class_member(g);
  return weighted_degree_sum(g, c_sequence(delta));
}

Rational bound_theorem4(const Graph& g, int delta) {
  const int delta_prime = require_class_member(g);
  if (delta <= delta_prime) {
    throw ClassError("Theorem 4 requires Δ > Δ′ (Δ=" + std::to_string(delta) +
                     ", Δ′=" + std::to_string(delta_prime) + ")");
  }
  return weighted_degree_sum(g, c_sequence(delta));
}

EulerLinear bound_theorem5(const Graph& g) {
  const int delta_prime = require_class_member(g);
  return weighted_degree_sum(g, d_sequence(delta_prime));
}

Rational bound_caro_wei(const Graph& g) {
  Rational sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) sum += make_rational(1, g.degree(v) + 1);
  return sum;
}

EulerLinear BoundReport::best_value() const {
  EulerLinear best_so_far = bound1;
  for (const EulerLinear& x :
       {EulerLinear(bound2), bound4, EulerLinear(caro_wei)}) {
    best_so_far = std::max(best_so_far, x);
  }
  for (const auto& [delta, value] : bound3) {
    best_so_far = std::max(best_so_far, EulerLinear(value));
  }
  return best_so_far;
}

BoundReport compute_bounds(const Graph& g, std::string graph_id,
                           std::optional<std::pair<int, int>> delta_range) {
  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.delta_max = require_class_member(g);
  report.bound1 = bound_brooks(g);
  report.bound2 = bound_theorem2(g);
  if (delta_range) {
    for (int delta = std::max(delta_range->first, report.delta_max + 1);
         delta <= delta_range->second; ++delta) {
      report.bound3.emplace(delta, bound_theorem4(g, delta));
    }
  }
  report.bound4 = bound_theorem5(g);
  report.caro_wei = bound_caro_wei(g);

  std::string label = "brooks";
  EulerLinear top = report.bound1;
  auto consider = [&](const EulerLinear& value, std::string name) {
    if (value > top) {
      top = value;
      label = std::move(name);
    }
  };
  consider(report.bound2, "theorem2");
  for (const auto& [delta, value] : report.bound3) {
    consider(value, "theorem4[" + std::to_string(delta) + "]");
  }
  consider(report.bound4, "theorem5");
  consider(report.caro_wei, "caro_wei");
  report.best = std::move(label);
  return report;
}

}  // namespace alphabound
