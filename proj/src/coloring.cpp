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

#include "alphabound/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

constexpr int kUncolored = -1;

// Breadth-first order from root over vertices with alive[v] != 0.
std::vector<Vertex> bfs_order(const Graph& g, Vertex root, const std::vector<char>& alive) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> order{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

// First-fit coloring of `order` (processed back to front), respecting colors
// already present in `colors`.
void greedy_reverse(const Graph& g, const std::vector<Vertex>& order,
                    std::vector<int>& colors) {
  std::vector<char> used(static_cast<std::size_t>(g.max_degree()) + 2, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::fill(used.begin(), used.end(), 0);
    for (Vertex w : g.neighbors(*it)) {
      if (colors[w] != kUncolored && static_cast<std::size_t>(colors[w]) < used.size()) {
        used[colors[w]] = 1;
      }
    }
    int c = 0;
    while (used[c]) ++c;
    colors[*it] = c;
  }
}

std::vector<int> color_from_low_degree_root(const Graph& g, Vertex root) {
  std::vector<int> colors(g.num_vertices(), kUncolored);
  const std::vector<char> alive(g.num_vertices(), 1);
  greedy_reverse(g, bfs_order(g, root, alive), colors);
  return colors;
}

std::vector<int> color_with_cut_vertex(const Graph& g, Vertex cut) {
  std::vector<int> colors(g.num_vertices(), kUncolored);
  colors[cut] = 0;
  const Vertex removed[] = {cut};
  for (const Component& piece : connected_components(g, removed)) {
    VertexSet vertices{cut};
    vertices.insert(vertices.end(), piece.vertices.begin(), piece.vertices.end());
    const Graph sub = g.induced_subgraph(vertices);
    // The cut vertex has neighbors outside this piece, so its degree is < Δ here.
    std::vector<int> local = color_from_low_degree_root(sub, 0);
    const int at_cut = local[0];
    for (int& c : local) {
      if (c == at_cut) c = 0;
      else if (c == 0) c = at_cut;
    }
    for (std::size_t i = 1; i < vertices.size(); ++i) colors[vertices[i]] = local[i];
  }
  return colors;
}

bool connected_without(const Graph& g, Vertex start, Vertex x, Vertex y) {
  std::vector<char> alive(g.num_vertices(), 1);
  alive[x] = alive[y] = 0;
  return bfs_order(g, start, alive).size() + 2 == g.num_vertices();
}

std::vector<int> color_two_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const Vertex x = nbrs[a];
        const Vertex y = nbrs[b];
        if (g.has_edge(x, y) || !connected_without(g, v, x, y)) continue;
        std::vector<int> colors(n, kUncolored);
        colors[x] = colors[y] = 0;
        std::vector<char> alive(n, 1);
        alive[x] = alive[y] = 0;
        greedy_reverse(g, bfs_order(g, v, alive), colors);
        return colors;
      }
    }
  }
  // Cannot happen for a 2-connected regular non-complete graph with Δ >= 3.
  throw std::logic_error("no Brooks triple found in a 2-connected regular graph");
}

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (colors.size() != g.num_vertices()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return std::none_of(colors.begin(), colors.end(), [](int c) { return c < 0; });
}

VertexSet articulation_points(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr int kUnseen = -1;
  std::vector<int> disc(n, kUnseen), low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  int clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    parent[root] = root;
    int root_children = 0;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next < nbrs.size()) {
        const Vertex w = nbrs[next++];
        if (disc[w] == kUnseen) {
          parent[w] = v;
          disc[w] = low[w] = clock++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Vertex done = v;
      stack.pop_back();
      if (done == root) continue;
      const Vertex p = parent[done];
      low[p] = std::min(low[p], low[done]);
      if (p != root && low[done] >= disc[p]) is_cut[p] = 1;
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

Coloring brooks_coloring(const Graph& g) {
  if (!is_connected(g)) throw ClassError("Brooks coloring needs a connected graph");
  const int delta = g.max_degree();
  if (delta < 3) {
    throw ClassError("Brooks coloring needs Δ ≥ 3 (got " + std::to_string(delta) + ")");
  }
  if (is_complete(g)) throw ClassError("Brooks coloring does not apply to K_{Δ+1}");

  std::vector<int> colors;
  if (!is_regular(g)) {
    Vertex root = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) < g.degree(root)) root = v;
    }
    colors = color_from_low_degree_root(g, root);
  } else if (const VertexSet cuts = articulation_points(g); !cuts.empty()) {
    colors = color_with_cut_vertex(g, cuts.front());
  } else {
    colors = color_two_connected(g);
  }

  const int used = 1 + *std::max_element(colors.begin(), colors.end());
  if (used > delta || !is_proper_coloring(g, colors)) {
    throw std::logic_error("Brooks coloring produced an invalid coloring");
  }
  return {std::move(colors), used};
}

VertexSet brooks_independent_set(const Graph& g) {
  if (!is_regular(g) || g.max_degree() < 3) {
    throw ClassError("brooks_independent_set needs a Δ-regular graph with Δ ≥ 3");
  }
  const Coloring coloring = brooks_coloring(g);
  std::vector<std::size_t> sizes(coloring.num_colors, 0);
  for (int c : coloring.colors) ++sizes[c];
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (coloring.colors[v] == best) out.push_back(v);
  }
  return out;
}

}  // namespace alphabound
