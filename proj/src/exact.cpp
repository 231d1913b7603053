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

#include "alphabound/exact.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace alphabound {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
constexpr std::size_t kNone = Bits::npos;

class Search {
 public:
  Search(const Graph& g, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = g.num_vertices();
    adjacency_.assign(n, Bits(n));
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) adjacency_[v].set(w);
    }
  }

  ExactResult run() {
    Bits all(adjacency_.size());
    all.set();
    std::vector<Vertex> chosen;
    branch(all, chosen);
    ExactResult out;
    out.optimal_set = best_;
    std::sort(out.optimal_set.begin(), out.optimal_set.end());
    out.alpha = static_cast<int>(best_.size());
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  void branch(Bits candidates, std::vector<Vertex>& chosen) {
    if (++nodes_ > budget_) {
      VertexSet best = best_.size() >= chosen.size() ? best_ : chosen;
      std::sort(best.begin(), best.end());
      throw BudgetExceeded(budget_, std::move(best));
    }
    const std::size_t depth = chosen.size();
    take_simplicial(candidates, chosen);

    if (candidates.none()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      chosen.resize(depth);
      return;
    }
    if (chosen.size() + clique_cover_size(candidates) <= best_.size()) {
      chosen.resize(depth);
      return;
    }

    std::size_t pivot = kNone;
    std::size_t pivot_degree = 0;
    for (std::size_t v = candidates.find_first(); v != kNone; v = candidates.find_next(v)) {
      const std::size_t d = (adjacency_[v] & candidates).count();
      if (pivot == kNone || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }

    Bits with = candidates - adjacency_[pivot];
    with.reset(pivot);
    chosen.push_back(static_cast<Vertex>(pivot));
    branch(std::move(with), chosen);
    chosen.pop_back();

    candidates.reset(pivot);
    branch(std::move(candidates), chosen);
    chosen.resize(depth);
  }

  // A vertex whose residual neighborhood is a clique belongs to some maximum
  // independent set of the residual graph.
  void take_simplicial(Bits& candidates, std::vector<Vertex>& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = candidates.find_first(); v != kNone;
           v = candidates.find_next(v)) {
        const Bits nbrs = adjacency_[v] & candidates;
        bool clique = true;
        for (std::size_t w = nbrs.find_first(); w != kNone && clique;
             w = nbrs.find_next(w)) {
          Bits others = nbrs;
          others.reset(w);
          clique = others.is_subset_of(adjacency_[w]);
        }
        if (!clique) continue;
        chosen.push_back(static_cast<Vertex>(v));
        candidates -= nbrs;
        candidates.reset(v);
        changed = true;
      }
    }
  }

  // Greedy partition of the candidates into cliques; the count bounds α.
  std::size_t clique_cover_size(const Bits& candidates) const {
    std::vector<Bits> joinable;  // common neighborhood of each clique so far
    for (std::size_t v = candidates.find_first(); v != kNone; v = candidates.find_next(v)) {
      bool placed = false;
      for (Bits& common : joinable) {
        if (common.test(v)) {
          common &= adjacency_[v];
          placed = true;
          break;
        }
      }
      if (!placed) joinable.push_back(adjacency_[v] & candidates);
    }
    return joinable.size();
  }

  std::vector<Bits> adjacency_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> best_;
};

}  // namespace

ExactResult exact_alpha(const Graph& g, std::uint64_t budget) {
  return Search(g, budget).run();
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) throw Error("vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

}  // namespace alphabound
