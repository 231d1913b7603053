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

#ifndef ALPHABOUND_GRAPH_HPP_
#define ALPHABOUND_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alphabound {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
// adjacency lists in compressed (CSR) form.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // are merged; self-loops and out-of-range endpoints throw Error.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  bool empty() const noexcept { return num_vertices() == 0; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  // O(log deg) via the sorted neighbor list.
  bool has_edge(Vertex u, Vertex v) const noexcept;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices` (any order, no duplicates). Vertex i of the
  // result corresponds to vertices[i].
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// Degree classes V_0..V_Δ. classes[i] lists the vertices of degree i in
// increasing order.
struct DegreeProfile {
  int delta_max = 0;
  int delta_min = 0;
  std::vector<VertexSet> classes;

  std::size_t count(int degree) const noexcept {
    return degree >= 0 && static_cast<std::size_t>(degree) < classes.size()
               ? classes[degree].size()
               : 0;
  }
};

// Throws Error("empty graph") on the empty graph.
DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

// Membership in the class of connected graphs with maximum degree exactly
// `delta` other than K_{delta+1}. Throws ClassError for delta < 3.
bool is_in_class_G_delta(const Graph& g, int delta);

// Describes why g is outside the class for its own maximum degree, or returns
// an empty string when it belongs.
std::string class_violation(const Graph& g);

// Throws ClassError carrying class_violation(g) unless g is in the class for
// its maximum degree; returns that maximum degree.
int require_class_member(const Graph& g);

struct Component {
  VertexSet vertices;  // sorted
  bool isolated() const noexcept { return vertices.size() == 1; }
};

// Components of g - removed, ordered by smallest vertex.
std::vector<Component> connected_components(const Graph& g,
                                            std::span<const Vertex> removed = {});

// Same, for the subgraph induced on vertices with alive[v] != 0, restricted to
// the vertices listed in `scope`.
std::vector<Component> connected_components_masked(
    const Graph& g, const std::vector<char>& alive, std::span<const Vertex> scope);

}  // namespace alphabound

#endif  // ALPHABOUND_GRAPH_HPP_
