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

#ifndef ALPHABOUND_WITNESS_HPP_
#define ALPHABOUND_WITNESS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphabound/coeffs.hpp"
#include "alphabound/graph.hpp"

namespace alphabound {

enum class StepKind {
  kPeel,    // take u, delete N[u], take the isolated remainder
  kBrooks,  // regular component with degree >= 3: largest Brooks color class
  kClique,  // complete component: one vertex
  kCycle,   // cycle component: every other vertex
};

std::string_view to_string(StepKind kind);

// One unit of work on a connected component of the active graph.
//
// Weights are f(v) = c_{d_G(v)} with degrees and coefficients taken from the
// input graph G, so the step weights sum to Σ c_i |V_i(G)|.
struct TraceStep {
  StepKind kind = StepKind::kPeel;
  std::size_t component_size = 0;
  Vertex component_min = 0;        // smallest vertex of the component

  // kPeel only.
  Vertex u = 0;
  int degree = 0;                  // degree of u in the component
  VertexSet neighbors;             // N(u) within the component
  VertexSet isolated;              // isolated vertices left after deleting N[u]
  std::vector<VertexSet> spawned;  // non-trivial components left
  Rational peel_weight;            // f(u) + Σ_{w∈N(u)} f(w)

  VertexSet selected;              // vertices this step adds to the set
  Rational weight;                 // f-weight this step accounts for
};

struct WitnessChecks {
  bool independent = false;         // no edge inside the returned set
  bool certified = false;           // |I| >= certified_bound
  bool peel_identity = false;       // every peel_weight <= 1
  bool accounting = false;          // Σ step weights == certified_bound
  bool local_steps = false;         // each step: |selected| >= weight
  bool isolated_independent = false;

  bool all() const noexcept {
    return independent && certified && peel_identity && accounting && local_steps &&
           isolated_independent;
  }
};

struct WitnessResult {
  VertexSet independent_set;  // sorted
  Rational certified_bound;   // Σ c_i |V_i(G)|
  std::vector<TraceStep> trace;
  WitnessChecks checks;
};

// Peel vertex of the connected subgraph induced on `active`: among shortest
// paths from a minimum-degree vertex to a maximum-degree vertex (degrees taken
// inside `active`), found by one breadth-first search seeded from every
// minimum-degree vertex in increasing index order, the path ending at the
// smallest-index maximum-degree vertex at minimum distance; returns its
// minimum-degree endpoint. Throws Error("no peel vertex in regular graph")
// when the induced subgraph is regular, and Error when it is disconnected.
Vertex select_peel_vertex(const Graph& g, std::span<const Vertex> active);

// Independent set of size >= Σ c_i(Δ')|V_i(g)| for g connected with
// maximum degree Δ' >= 3 and g != K_{Δ'+1}. Components are processed
// smallest-vertex first and the trace is in that (pre-)order.
WitnessResult witness_theorem2(const Graph& g);

struct WeightAssignment {
  std::vector<Rational> weights;  // indexed by vertex
};

// Weights f(v) = coeffs[d(v)] (0 for isolated vertices).
WeightAssignment degree_weights(const Graph& g, const RationalSequence& coeffs);

struct KpCheck {
  bool holds = false;
  std::optional<Vertex> violating_vertex;  // g(v) > 2/(2d(v)+1)
  std::optional<VertexSet> violating_clique;
  Rational total;                          // Σ g(v)
};

// Hypothesis of the Kelly-Postle weighting theorem: g(v) <= 2/(2d(v)+1) for
// every v and Σ_{v∈K} g(v) <= 1 for every maximal clique K. Weights must be
// nonnegative (Error otherwise) and one per vertex.
KpCheck check_kp_hypothesis(const Graph& g, const WeightAssignment& w);

}  // namespace alphabound

#endif  // ALPHABOUND_WITNESS_HPP_
