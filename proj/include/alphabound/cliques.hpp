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

#ifndef ALPHABOUND_CLIQUES_HPP_
#define ALPHABOUND_CLIQUES_HPP_

#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

// All maximal cliques (Bron-Kerbosch with pivoting, outer loop in degeneracy
// order). Each clique is sorted; the list is sorted lexicographically. An
// isolated vertex is a maximal clique of size 1.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex,
// smallest index on ties).
VertexSet degeneracy_order(const Graph& g);

}  // namespace alphabound

#endif  // ALPHABOUND_CLIQUES_HPP_
