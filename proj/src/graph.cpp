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

#include "alphabound/graph.hpp"

#include <algorithm>
#include <string>

#include "alphabound/error.hpp"

namespace alphabound {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.reserve(arcs.size());
  for (const auto& arc : arcs) g.adjacency_.push_back(arc.second);
  return g;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const noexcept {
  if (empty()) return 0;
  int best = degree(0);
  for (Vertex v = 1; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(num_vertices(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      if (local[w] != kAbsent && i < local[w]) {
        sub.emplace_back(static_cast<Vertex>(i), local[w]);
      }
    }
  }
  return from_edges(vertices.size(), sub);
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.empty()) throw Error("empty graph");
  DegreeProfile profile;
  profile.delta_max = g.max_degree();
  profile.delta_min = g.min_degree();
  profile.classes.resize(profile.delta_max + 1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    profile.classes[g.degree(v)].push_back(v);
  }
  return profile;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  return connected_components(g).size() == 1;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.num_vertices();
  return n > 0 && g.num_edges() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g) {
  return !g.empty() && g.max_degree() == g.min_degree();
}

bool is_in_class_G_delta(const Graph& g, int delta) {
  if (delta < 3) throw ClassError("class defined only for Δ ≥ 3");
  if (g.empty() || g.max_degree() != delta) return false;
  return is_connected(g) && !is_complete(g);
}

std::string class_violation(const Graph& g) {
  if (g.empty()) return "empty graph";
  if (!is_connected(g)) return "graph not connected";
  const int delta = g.max_degree();
  if (delta < 3) {
    return "maximum degree " + std::to_string(delta) +
           " is below 3; bounds are defined only for Δ ≥ 3";
  }
  if (is_complete(g)) {
    return "graph is K_{Δ+1} (Δ=" + std::to_string(delta) +
           "), bounds do not apply";
  }
  return {};
}

int require_class_member(const Graph& g) {
  if (auto why = class_violation(g); !why.empty()) {
    throw ClassError("not in class: " + why);
  }
  return g.max_degree();
}

std::vector<Component> connected_components_masked(
    const Graph& g, const std::vector<char>& alive, std::span<const Vertex> scope) {
  std::vector<Vertex> sorted_scope(scope.begin(), scope.end());
  std::sort(sorted_scope.begin(), sorted_scope.end());
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Component> out;
  std::vector<Vertex> stack;
  for (Vertex s : sorted_scope) {
    if (!alive[s] || seen[s]) continue;
    Component comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Component> connected_components(const Graph& g,
                                            std::span<const Vertex> removed) {
  std::vector<char> alive(g.num_vertices(), 1);
  for (Vertex v : removed) {
    if (v >= g.num_vertices()) {
      throw Error("removed vertex " + std::to_string(v) + " not in graph");
    }
    alive[v] = 0;
  }
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return connected_components_masked(g, alive, all);
}

}  // namespace alphabound
