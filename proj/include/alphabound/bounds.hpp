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

#ifndef ALPHABOUND_BOUNDS_HPP_
#define ALPHABOUND_BOUNDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "alphabound/coeffs.hpp"
#include "alphabound/graph.hpp"

namespace alphabound {

// Σ_i coeffs[i]·|V_i(g)| over i = 1..min(coeffs.size(), maxdeg(g)).
Rational weighted_degree_sum(const Graph& g, const RationalSequence& coeffs);
EulerLinear weighted_degree_sum(const Graph& g, const EulerSequence& coeffs);

// All of the following except bound_caro_wei require g to be connected with
// maximum degree Δ' >= 3 and g != K_{Δ'+1}; otherwise they throw ClassError.

// |V(g)| / Δ'.
Rational bound_brooks(const Graph& g);

// Σ c_i(Δ')·|V_i(g)|.
Rational bound_theorem2(const Graph& g);

// Σ_{i ≤ Δ'} c_i(delta)·|V_i(g)| for delta > Δ'.
Rational bound_theorem4(const Graph& g, int delta);

// Σ d_i·|V_i(g)|.
EulerLinear bound_theorem5(const Graph& g);

// Σ_v 1/(d(v)+1). Defined for every graph.
Rational bound_caro_wei(const Graph& g);

struct BoundReport {
  std::string graph_id;
  int delta_max = 0;
  Rational bound1;                       // Brooks
  Rational bound2;                       // c-sequence, "theorem2"
  std::map<int, Rational> bound3;        // truncated c(Δ), keyed by Δ > Δ'
  EulerLinear bound4;                    // d-sequence, "theorem5"
  Rational caro_wei;
  std::string best;                      // label of the largest value

  // Largest bound as an exact value, for comparison against α.
  EulerLinear best_value() const;
};

// Evaluates every bound; bound3 is filled for each Δ in [delta_from,
// delta_to] with Δ > Δ'. Labels: "brooks", "theorem2", "theorem4[Δ]",
// "theorem5", "caro_wei". Ties go to the earlier label.
BoundReport compute_bounds(const Graph& g, std::string graph_id = {},
                           std::optional<std::pair<int, int>> delta_range = {});

}  // namespace alphabound

#endif  // ALPHABOUND_BOUNDS_HPP_
