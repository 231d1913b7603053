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

#include "alphabound/witness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "alphabound/bounds.hpp"
#include "alphabound/cliques.hpp"
#include "alphabound/coloring.hpp"
#include "alphabound/error.hpp"
#include "alphabound/exact.hpp"

namespace alphabound {
namespace {

// Scratch state shared by every step of one witness run. Only the entries of
// the current component are touched, so a step costs O(component size · Δ).
class PeelEngine {
 public:
  explicit PeelEngine(const Graph& g)
      : g_(g), alive_(g.num_vertices(), 1), local_degree_(g.num_vertices(), 0),
        dist_(g.num_vertices(), -1), origin_(g.num_vertices(), 0) {}

  std::vector<char>& alive() { return alive_; }

  // Degrees inside the component; returns (min, max).
  std::pair<int, int> compute_degrees(const VertexSet& comp) {
    int lo = std::numeric_limits<int>::max();
    int hi = 0;
    for (Vertex v : comp) {
      int d = 0;
      for (Vertex w : g_.neighbors(v)) d += alive_[w] ? 1 : 0;
      local_degree_[v] = d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    return {lo, hi};
  }

  int local_degree(Vertex v) const { return local_degree_[v]; }

  // Requires compute_degrees(comp) with min < max.
  Vertex peel_vertex(const VertexSet& comp, int min_deg, int max_deg) {
    std::vector<Vertex> frontier;
    std::vector<Vertex> touched;
    for (Vertex v : comp) {
      if (local_degree_[v] == min_deg) {
        dist_[v] = 0;
        origin_[v] = v;
        frontier.push_back(v);
        touched.push_back(v);
      }
    }
    std::optional<Vertex> target;
    while (!frontier.empty() && !target) {
      std::vector<Vertex> next;
      for (Vertex v : frontier) {
        for (Vertex w : g_.neighbors(v)) {
          if (!alive_[w] || dist_[w] >= 0) continue;
          dist_[w] = dist_[v] + 1;
          origin_[w] = origin_[v];
          touched.push_back(w);
          next.push_back(w);
        }
      }
      for (Vertex w : next) {
        if (local_degree_[w] == max_deg && (!target || w < *target)) target = w;
      }
      frontier = std::move(next);
    }
    const Vertex u = origin_[target.value()];
    for (Vertex v : touched) dist_[v] = -1;
    return u;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> local_degree_;
  std::vector<int> dist_;
  std::vector<Vertex> origin_;
};

VertexSet cycle_alternate(const Graph& g, const std::vector<char>& alive,
                          const VertexSet& comp) {
  VertexSet walk{comp.front()};
  Vertex prev = comp.front();
  Vertex cur = comp.front();
  while (true) {
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (alive[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == comp.front()) break;
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  VertexSet out;
  for (std::size_t i = 0; i < walk.size() / 2; ++i) out.push_back(walk[2 * i]);
  return out;
}

Rational sum_weights(const std::vector<Rational>& f, const VertexSet& vs) {
  Rational total = 0;
  for (Vertex v : vs) total += f[v];
  return total;
}

}  // namespace

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kPeel:
      return "peel";
    case StepKind::kBrooks:
      return "brooks";
    case StepKind::kClique:
      return "clique";
    case StepKind::kCycle:
      return "cycle";
  }
  return "unknown";
}

Vertex select_peel_vertex(const Graph& g, std::span<const Vertex> active) {
  VertexSet comp(active.begin(), active.end());
  std::sort(comp.begin(), comp.end());
  if (comp.empty()) throw Error("empty active set");
  PeelEngine engine(g);
  auto& alive = engine.alive();
  std::fill(alive.begin(), alive.end(), 0);
  for (Vertex v : comp) {
    if (v >= g.num_vertices()) throw Error("vertex " + std::to_string(v) + " not in graph");
    alive[v] = 1;
  }
  if (connected_components_masked(g, alive, comp).size() != 1) {
    throw Error("active subgraph is not connected");
  }
  const auto [lo, hi] = engine.compute_degrees(comp);
  if (lo == hi) throw Error("no peel vertex in regular graph");
  return engine.peel_vertex(comp, lo, hi);
}

WeightAssignment degree_weights(const Graph& g, const RationalSequence& coeffs) {
  WeightAssignment w;
  w.weights.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    if (d > coeffs.size()) {
      throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                  " beyond the coefficient range");
    }
    w.weights[v] = d == 0 ? Rational(0) : coeffs[d];
  }
  return w;
}

WitnessResult witness_theorem2(const Graph& g) {
  const int delta = require_class_member(g);
  const std::vector<Rational> f = degree_weights(g, c_sequence(delta)).weights;

  WitnessResult result;
  result.certified_bound = bound_theorem2(g);
  PeelEngine engine(g);
  auto& alive = engine.alive();
  bool isolated_ok = true;

  std::vector<VertexSet> work;
  work.emplace_back(g.num_vertices());
  std::iota(work.back().begin(), work.back().end(), Vertex{0});

  while (!work.empty()) {
    VertexSet comp = std::move(work.back());
    work.pop_back();
    TraceStep step;
    step.component_size = comp.size();
    step.component_min = comp.front();
    const auto [lo, hi] = engine.compute_degrees(comp);

    if (lo == hi) {
      if (comp.size() == static_cast<std::size_t>(hi) + 1) {
        step.kind = StepKind::kClique;
        // Lowest degree in G, so pendant cliques give up their leaf.
        step.selected = {*std::min_element(comp.begin(), comp.end(), [&](Vertex a, Vertex b) {
          return std::pair{g.degree(a), a} < std::pair{g.degree(b), b};
        })};
      } else if (hi == 2) {
        step.kind = StepKind::kCycle;
        step.selected = cycle_alternate(g, alive, comp);
      } else {
        step.kind = StepKind::kBrooks;
        for (Vertex local : brooks_independent_set(g.induced_subgraph(comp))) {
          step.selected.push_back(comp[local]);
        }
      }
      step.weight = sum_weights(f, comp);
      for (Vertex v : comp) alive[v] = 0;
    } else {
      step.kind = StepKind::kPeel;
      step.u = engine.peel_vertex(comp, lo, hi);
      step.degree = engine.local_degree(step.u);
      for (Vertex w : g.neighbors(step.u)) {
        if (alive[w]) step.neighbors.push_back(w);
      }
      step.peel_weight = f[step.u] + sum_weights(f, step.neighbors);
      alive[step.u] = 0;
      for (Vertex w : step.neighbors) alive[w] = 0;

      for (Component& rest : connected_components_masked(g, alive, comp)) {
        if (rest.isolated()) {
          step.isolated.push_back(rest.vertices.front());
          alive[rest.vertices.front()] = 0;
        } else {
          step.spawned.push_back(std::move(rest.vertices));
        }
      }
      step.selected = {step.u};
      step.selected.insert(step.selected.end(), step.isolated.begin(), step.isolated.end());
      step.weight = step.peel_weight + sum_weights(f, step.isolated);
      isolated_ok = isolated_ok && is_independent(g, step.selected);
      for (auto it = step.spawned.rbegin(); it != step.spawned.rend(); ++it) {
        work.push_back(*it);
      }
    }
    result.independent_set.insert(result.independent_set.end(), step.selected.begin(),
                                  step.selected.end());
    result.trace.push_back(std::move(step));
  }
  std::sort(result.independent_set.begin(), result.independent_set.end());

  WitnessChecks& checks = result.checks;
  checks.independent =
      std::adjacent_find(result.independent_set.begin(), result.independent_set.end()) ==
          result.independent_set.end() &&
      is_independent(g, result.independent_set);
  checks.certified = Rational(result.independent_set.size()) >= result.certified_bound;
  checks.peel_identity = true;
  checks.local_steps = true;
  Rational accounted = 0;
  for (const TraceStep& step : result.trace) {
    if (step.kind == StepKind::kPeel && step.peel_weight > 1) checks.peel_identity = false;
    if (Rational(step.selected.size()) < step.weight) checks.local_steps = false;
    accounted += step.weight;
  }
  checks.accounting = accounted == result.certified_bound;
  checks.isolated_independent = isolated_ok;
  return result;
}

KpCheck check_kp_hypothesis(const Graph& g, const WeightAssignment& w) {
  if (w.weights.size() != g.num_vertices()) {
    throw Error("weight assignment has " + std::to_string(w.weights.size()) +
                " entries for " + std::to_string(g.num_vertices()) + " vertices");
  }
  KpCheck out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (w.weights[v] < 0) throw Error("negative weight at vertex " + std::to_string(v));
    out.total += w.weights[v];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (w.weights[v] > make_rational(2, 2 * g.degree(v) + 1)) {
      out.violating_vertex = v;
      return out;
    }
  }
  for (VertexSet& clique : enumerate_maximal_cliques(g)) {
    if (sum_weights(w.weights, clique) > 1) {
      out.violating_clique = std::move(clique);
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace alphabound
