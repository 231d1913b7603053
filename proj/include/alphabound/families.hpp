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

#ifndef ALPHABOUND_FAMILIES_HPP_
#define ALPHABOUND_FAMILIES_HPP_

#include <cstdint>

#include "alphabound/graph.hpp"

namespace alphabound {

// Replaces each vertex x of a connected delta-regular template by a copy of
// K_delta on vertices x·delta .. x·delta+delta-1, and each template edge xy
// (lexicographic order) by one edge between the next unused vertex of each
// copy, so the added edges form a matching. The result is delta-regular with
// α = |V(template)|.
Graph gen_regular_blocks(int delta, const Graph& template_graph);

// Circulant on k vertices joining i to i±1..i±⌊delta/2⌋, plus i to i+k/2 when
// delta is odd. Connected and delta-regular. Requires k >= delta+1, and k even
// when delta is odd.
Graph circulant_template(int k, int delta);

// Starts from K_delta and k-1 times joins the highest-index vertex of degree
// delta-1 to the first vertex of a new K_delta. α = k and the degree classes
// are |V_{Δ-1}| = kΔ-(2k-2), |V_Δ| = 2k-2.
Graph gen_chain_A(int delta, int k);

// gen_chain_A(delta, k) with a pendant K_{j+1} joined by one edge to every
// vertex of degree delta-1. Requires 1 <= j <= delta-2 and k >= 2.
Graph gen_attach_B(int delta, int k, int j);

// Cycle on 0..n-1, pendant n+i on cycle vertex i, extra pendant 2n on vertex
// 0. Degree classes (n+1, 0, n-1, 1), α = n+1. Requires n >= 3.
Graph gen_gstar(int n);

// Random connected graph with maximum degree exactly delta, never
// K_{delta+1}, deterministic in seed. Requires n >= delta+1 >= 4.
Graph gen_random_connected(int n, int delta, std::uint64_t seed,
                           int max_retries = 1000);

// Random connected delta-regular graph (not complete), from a circulant
// scrambled by degree-preserving edge switches. Requires n >= delta+2,
// delta >= 3 and n·delta even.
Graph gen_random_regular(int n, int delta, std::uint64_t seed);

}  // namespace alphabound

#endif  // ALPHABOUND_FAMILIES_HPP_
