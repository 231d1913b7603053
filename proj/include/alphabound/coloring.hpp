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

#ifndef ALPHABOUND_COLORING_HPP_
#define ALPHABOUND_COLORING_HPP_

#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

// Proper vertex coloring; colors[v] in 0..num_colors-1.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

// Constructive Brooks coloring with at most Δ colors for a connected graph of
// maximum degree Δ >= 3 that is not complete. Throws ClassError otherwise.
//
//  * not regular: greedy in reverse breadth-first order from a vertex of
//    degree < Δ;
//  * regular with a cut vertex c: each piece G[C ∪ {c}] is colored that way
//    rooted at c, then colors are permuted so c agrees;
//  * regular and 2-connected: pick v with non-adjacent neighbors x, y such
//    that G - {x, y} is connected, give x and y the same color, then greedy
//    in reverse breadth-first order of G - {x, y} from v.
Coloring brooks_coloring(const Graph& g);

// Largest color class of brooks_coloring (ties: smallest color). Requires g
// connected, Δ-regular with Δ >= 3, and g != K_{Δ+1}. Size >= ⌈|V|/Δ⌉.
VertexSet brooks_independent_set(const Graph& g);

// Cut vertices of g in increasing order.
VertexSet articulation_points(const Graph& g);

}  // namespace alphabound

#endif  // ALPHABOUND_COLORING_HPP_
