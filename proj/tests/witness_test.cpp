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

#include <numeric>

#include "alphabound/bounds.hpp"
#include "alphabound/error.hpp"
#include "alphabound/exact.hpp"
#include "alphabound/families.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/test_graphs.hpp"

namespace alphabound {
namespace {

using ::testing::ElementsAre;

Rational q(long long p, long long d = 1) { return make_rational(p, d); }

// Recomputes what the trace claims from the graph alone.
void expect_consistent_trace(const Graph& g, const WitnessResult& r) {
  const int delta = g.max_degree();
  const RationalSequence c = c_sequence(delta);
  std::size_t selected = 0;
  for (const TraceStep& s : r.trace) {
    if (s.kind != StepKind::kPeel) continue;
    Rational w = c[g.degree(s.u)];
    for (Vertex v : s.neighbors) {
      EXPECT_TRUE(g.has_edge(s.u, v));
      w += c[g.degree(v)];
    }
    EXPECT_EQ(w, s.peel_weight);
    EXPECT_LE(s.peel_weight, 1);
    EXPECT_EQ(static_cast<int>(s.neighbors.size()), s.degree);
    for (Vertex v : s.isolated) EXPECT_FALSE(g.has_edge(s.u, v));
  }
  for (const TraceStep& s : r.trace) selected += s.selected.size();
  EXPECT_EQ(selected, r.independent_set.size());
}

TEST(SelectPeelVertex, StarPicksALeaf) {
  const Graph g = testing::star(3);
  const Vertex all[] = {0, 1, 2, 3};
  const Vertex u = select_peel_vertex(g, all);
  EXPECT_EQ(g.degree(u), 1);
  const RationalSequence c = c_sequence(3);
  EXPECT_EQ(c[1] + c[3], 1);
}

TEST(SelectPeelVertex, Errors) {
  const Vertex cyc[] = {0, 1, 2, 3, 4};
  EXPECT_THROW(select_peel_vertex(testing::cycle(5), cyc), Error);
  const Vertex split[] = {0, 2};
  EXPECT_THROW(select_peel_vertex(testing::path(3), split), Error);
}

TEST(SelectPeelVertex, WeightConditionOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int delta = 3 + static_cast<int>(seed % 4);
    const Graph g = gen_random_connected(10 + static_cast<int>(seed % 15), delta, seed);
    if (is_regular(g)) continue;
    VertexSet all(g.num_vertices());
    std::iota(all.begin(), all.end(), Vertex{0});
    const Vertex u = select_peel_vertex(g, all);
    const RationalSequence c = c_sequence(delta);
    Rational w = c[g.degree(u)];
    for (Vertex v : g.neighbors(u)) w += c[g.degree(v)];
    EXPECT_LE(w, 1) << "seed " << seed;
    EXPECT_EQ(g.degree(u), g.min_degree());
  }
}

TEST(Witness, Star) {
  const WitnessResult r = witness_theorem2(testing::star(3));
  EXPECT_THAT(r.independent_set, ElementsAre(1, 2, 3));
  EXPECT_EQ(r.certified_bound, q(7, 3));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].kind, StepKind::kPeel);
  EXPECT_EQ(r.trace[0].peel_weight, 1);
  EXPECT_THAT(r.trace[0].isolated, ElementsAre(2, 3));
  EXPECT_TRUE(r.checks.all());
}

TEST(Witness, GStarTakesAllPendants) {
  const Graph g = gen_gstar(10);
  const WitnessResult r = witness_theorem2(g);
  EXPECT_TRUE(r.checks.all());
  EXPECT_GE(r.independent_set.size(), 10u);
  EXPECT_EQ(r.certified_bound, bound_theorem2(g));
  int pendants = 0;
  for (Vertex v : r.independent_set) pendants += g.degree(v) == 1;
  EXPECT_EQ(pendants, 11);
  expect_consistent_trace(g, r);
}

TEST(Witness, RegularBaseCases) {
  const WitnessResult p = witness_theorem2(testing::petersen());
  EXPECT_TRUE(p.checks.all());
  EXPECT_GE(p.independent_set.size(), 4u);
  ASSERT_EQ(p.trace.size(), 1u);
  EXPECT_EQ(p.trace[0].kind, StepKind::kBrooks);

  // Chain of K_4 blocks: peeling leaves cliques and shorter chains.
  const Graph chain = gen_chain_A(4, 4);
  const WitnessResult c = witness_theorem2(chain);
  EXPECT_TRUE(c.checks.all());
  EXPECT_EQ(c.independent_set.size(), 4u);
  expect_consistent_trace(chain, c);
}

TEST(Witness, RejectsOffClass) {
  EXPECT_THROW(witness_theorem2(testing::complete(4)), ClassError);
  EXPECT_THROW(witness_theorem2(testing::cycle(8)), ClassError);
}

TEST(Witness, RandomGraphsAreCertified) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int delta = 3 + static_cast<int>(seed % 4);
    const Graph g = gen_random_connected(delta + 1 + static_cast<int>(seed % 20), delta, seed);
    const WitnessResult r = witness_theorem2(g);
    ASSERT_TRUE(r.checks.all()) << "seed " << seed;
    EXPECT_GE(Rational(r.independent_set.size()), r.certified_bound);
    expect_consistent_trace(g, r);
  }
}

TEST(Witness, Deterministic) {
  const Graph g = gen_random_connected(30, 5, 42);
  EXPECT_EQ(witness_theorem2(g).independent_set, witness_theorem2(g).independent_set);
}

TEST(KpHypothesis, Corollary1WeightsPass) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int delta = 3 + static_cast<int>(seed % 4);
    const Graph g = gen_random_connected(8 + static_cast<int>(seed % 6), delta, seed);
    const auto w = degree_weights(g, corollary1_sequence(delta, q(2, 2 * delta + 1)));
    const KpCheck k = check_kp_hypothesis(g, w);
    EXPECT_TRUE(k.holds) << "seed " << seed;
    EXPECT_GE(Rational(exact_alpha(g).alpha), k.total);
  }
}

TEST(KpHypothesis, Theorem2WeightsFailOnRegularGraphs) {
  const Graph g = gen_regular_blocks(3, testing::complete(4));
  const KpCheck k = check_kp_hypothesis(g, degree_weights(g, c_sequence(3)));
  EXPECT_FALSE(k.holds);
  ASSERT_TRUE(k.violating_vertex.has_value());
  EXPECT_EQ(g.degree(*k.violating_vertex), 3);
}

TEST(KpHypothesis, UniformWeightsOnCompleteGraphSitAtBoundary) {
  const Graph k5 = testing::complete(5);
  WeightAssignment w{std::vector<Rational>(5, q(1, 5))};
  const KpCheck k = check_kp_hypothesis(k5, w);
  EXPECT_TRUE(k.holds);
  EXPECT_EQ(k.total, 1);
  w.weights[0] = q(2, 9);
  const KpCheck over = check_kp_hypothesis(k5, w);
  EXPECT_FALSE(over.holds);
  EXPECT_THAT(over.violating_clique.value(), ElementsAre(0, 1, 2, 3, 4));
}

TEST(KpHypothesis, Errors) {
  const Graph g = testing::star(3);
  EXPECT_THROW(check_kp_hypothesis(g, WeightAssignment{{q(1), q(1)}}), Error);
  EXPECT_THROW(check_kp_hypothesis(g, WeightAssignment{{q(-1), q(0), q(0), q(0)}}), Error);
}

}  // namespace
}  // namespace alphabound
