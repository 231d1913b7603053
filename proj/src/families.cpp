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

#include "alphabound/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

void add_clique(std::vector<Edge>& edges, Vertex first, int size) {
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) edges.emplace_back(first + a, first + b);
  }
}

// Uniform integer in [0, bound) by rejection, so results do not depend on the
// standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = engine_.max() - engine_.max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

Edge normalized(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct EdgeBuilder {
  explicit EdgeBuilder(int n) : degree(n, 0) {}

  bool has(Vertex u, Vertex v) const { return edges.count(normalized(u, v)) != 0; }
  void add(Vertex u, Vertex v) {
    edges.insert(normalized(u, v));
    ++degree[u];
    ++degree[v];
  }
  Graph build() const {
    const std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(degree.size(), list);
  }

  std::set<Edge> edges;
  std::vector<int> degree;
};

std::vector<Vertex> vertices_of_degree(const Graph& g, int d) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

}  // namespace

Graph gen_regular_blocks(int delta, const Graph& template_graph) {
  if (delta < 3) throw Error("regular blocks need Δ ≥ 3");
  if (!is_connected(template_graph)) throw Error("template is not connected");
  if (!is_regular(template_graph) || template_graph.max_degree() != delta) {
    throw Error("template is not " + std::to_string(delta) + "-regular");
  }
  const std::size_t k = template_graph.num_vertices();
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < k; ++x) add_clique(edges, static_cast<Vertex>(x * delta), delta);
  std::vector<int> next_slot(k, 0);
  for (const auto& [x, y] : template_graph.edges()) {
    edges.emplace_back(static_cast<Vertex>(x * delta + next_slot[x]++),
                       static_cast<Vertex>(y * delta + next_slot[y]++));
  }
  return Graph::from_edges(k * delta, edges);
}

Graph circulant_template(int k, int delta) {
  if (delta < 2 || k < delta + 1) {
    throw Error("circulant template needs k ≥ Δ+1 (k=" + std::to_string(k) +
                ", Δ=" + std::to_string(delta) + ")");
  }
  if (delta % 2 == 1 && k % 2 == 1) throw Error("odd Δ needs an even number of vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int s = 1; s <= delta / 2; ++s) edges.emplace_back(i, (i + s) % k);
    if (delta % 2 == 1 && i < k / 2) edges.emplace_back(i, i + k / 2);
  }
  return Graph::from_edges(k, edges);
}

Graph gen_chain_A(int delta, int k) {
  if (delta < 3 || k < 1) throw Error("chain needs Δ ≥ 3 and k ≥ 1");
  const int n = k * delta;
  std::vector<int> degree(n, 0);
  std::vector<Edge> edges;
  add_clique(edges, 0, delta);
  std::fill(degree.begin(), degree.begin() + delta, delta - 1);
  for (int block = 1; block < k; ++block) {
    const int first = block * delta;
    int x = first - 1;
    while (degree[x] != delta - 1) --x;
    add_clique(edges, first, delta);
    std::fill(degree.begin() + first, degree.begin() + first + delta, delta - 1);
    edges.emplace_back(x, first);
    ++degree[x];
    ++degree[first];
  }
  return Graph::from_edges(n, edges);
}

Graph gen_attach_B(int delta, int k, int j) {
  if (delta < 3) throw Error("attachment family needs Δ ≥ 3");
  if (j < 1 || j > delta - 2) {
    throw Error("j must lie in 1.." + std::to_string(delta - 2) + " (got " +
                std::to_string(j) + ")");
  }
  if (k < 2) throw Error("attachment family needs k ≥ 2");
  const Graph chain = gen_chain_A(delta, k);
  std::vector<Edge> edges = chain.edges();
  Vertex next = static_cast<Vertex>(chain.num_vertices());
  for (Vertex x : vertices_of_degree(chain, delta - 1)) {
    add_clique(edges, next, j + 1);
    edges.emplace_back(x, next);
    next += j + 1;
  }
  return Graph::from_edges(next, edges);
}

Graph gen_gstar(int n) {
  if (n < 3) throw Error("G* needs a cycle of length n ≥ 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  edges.emplace_back(0, 2 * n);
  return Graph::from_edges(2 * n + 1, edges);
}

Graph gen_random_connected(int n, int delta, std::uint64_t seed, int max_retries) {
  if (delta < 3 || n < delta + 1) {
    throw Error("random graph needs n ≥ Δ+1 ≥ 4 (n=" + std::to_string(n) +
                ", Δ=" + std::to_string(delta) + ")");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    EdgeBuilder b(n);
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    // Random spanning tree with degrees capped at delta; `open` holds the
    // attached vertices that can still take an edge.
    std::vector<Vertex> open{order[0]};
    for (int t = 1; t < n; ++t) {
      const std::size_t pick = rng.below(open.size());
      const Vertex parent = open[pick];
      b.add(order[t], parent);
      if (b.degree[parent] == delta) {
        open[pick] = open.back();
        open.pop_back();
      }
      open.push_back(order[t]);
    }

    const int max_extra = n * delta / 2 - (n - 1);
    const int extra = static_cast<int>(rng.below(max_extra + 1));
    for (int added = 0, tries = 0; added < extra && tries < 20 * (extra + 1); ++tries) {
      const Vertex u = static_cast<Vertex>(rng.below(n));
      const Vertex v = static_cast<Vertex>(rng.below(n));
      if (u == v || b.degree[u] >= delta || b.degree[v] >= delta || b.has(u, v)) continue;
      b.add(u, v);
      ++added;
    }

    if (*std::max_element(b.degree.begin(), b.degree.end()) < delta) {
      const Vertex hub = static_cast<Vertex>(rng.below(n));
      std::vector<Vertex> candidates;
      for (int w = 0; w < n; ++w) {
        const Vertex cand = static_cast<Vertex>(w);
        if (cand != hub && !b.has(hub, cand) && b.degree[cand] < delta) {
          candidates.push_back(cand);
        }
      }
      for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i) {
        std::swap(candidates[i], candidates[rng.below(i + 1)]);
      }
      for (Vertex cand : candidates) {
        if (b.degree[hub] == delta) break;
        b.add(hub, cand);
      }
      if (b.degree[hub] != delta) continue;
    }

    Graph g = b.build();
    if (g.max_degree() == delta && !is_complete(g)) return g;
  }
  throw Error("could not generate a connected graph with n=" + std::to_string(n) +
              ", Δ=" + std::to_string(delta) + " after " + std::to_string(max_retries) +
              " attempts");
}

Graph gen_random_regular(int n, int delta, std::uint64_t seed) {
  if (delta < 3 || n < delta + 2 || (n * delta) % 2 != 0) {
    throw Error("random regular graph needs Δ ≥ 3, n ≥ Δ+2 and nΔ even (n=" +
                std::to_string(n) + ", Δ=" + std::to_string(delta) + ")");
  }
  const Graph start = circulant_template(n, delta);
  std::vector<Edge> edges = start.edges();
  std::set<Edge> present(edges.begin(), edges.end());
  Rng rng(seed);
  const std::size_t m = edges.size();
  for (int round = 0; round < 100; ++round) {
    for (std::size_t t = 0; t < 10 * m; ++t) {
      const std::size_t i = rng.below(m);
      const std::size_t j = rng.below(m);
      if (i == j) continue;
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (rng.below(2) == 1) std::swap(c, d);
      if (a == c || a == d || b == c || b == d) continue;
      const Edge e1 = normalized(a, c);
      const Edge e2 = normalized(b, d);
      if (present.count(e1) || present.count(e2)) continue;
      present.erase(edges[i]);
      present.erase(edges[j]);
      present.insert(e1);
      present.insert(e2);
      edges[i] = e1;
      edges[j] = e2;
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error("random regular graph stayed disconnected");
}

}  // namespace alphabound
