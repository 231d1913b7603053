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

#include "alphabound/cliques.hpp"

#include <algorithm>
#include <set>

namespace alphabound {
namespace {

VertexSet intersect(const VertexSet& a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  void expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        VertexSet clique = r;
        std::sort(clique.begin(), clique.end());
        cliques_.push_back(std::move(clique));
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)| over P ∪ X.
    Vertex pivot = p.front();
    std::size_t best = 0;
    for (const VertexSet* pool : {&p, &x}) {
      for (Vertex u : *pool) {
        const std::size_t hits = intersect(p, g_.neighbors(u)).size();
        if (hits > best) {
          best = hits;
          pivot = u;
        }
      }
    }
    VertexSet branch_on;
    const auto pivot_nbrs = g_.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pivot_nbrs.begin(), pivot_nbrs.end(),
                        std::back_inserter(branch_on));
    for (Vertex v : branch_on) {
      r.push_back(v);
      expand(r, intersect(p, g_.neighbors(v)), intersect(x, g_.neighbors(v)));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  std::vector<VertexSet> take() {
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

 private:
  const Graph& g_;
  std::vector<VertexSet> cliques_;
};

}  // namespace

VertexSet degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  VertexSet order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return order;
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
  const VertexSet order = degeneracy_order(g);
  std::vector<std::size_t> position(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  BronKerbosch search(g);
  for (Vertex v : order) {
    VertexSet later, earlier;
    for (Vertex w : g.neighbors(v)) {
      (position[w] > position[v] ? later : earlier).push_back(w);
    }
    VertexSet r{v};
    search.expand(r, std::move(later), std::move(earlier));
  }
  return search.take();
}

}  // namespace alphabound
