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

#include <random>

#include "alphabound/families.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

namespace alphabound {
namespace {

using ::testing::ElementsAre;

TEST(MaximalCliques, Examples) {
  const Graph paw = testing::make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_THAT(enumerate_maximal_cliques(paw),
              ElementsAre(VertexSet{0, 1, 2}, VertexSet{2, 3}));
  EXPECT_EQ(enumerate_maximal_cliques(testing::cycle(5)).size(), 5u);
  EXPECT_THAT(enumerate_maximal_cliques(testing::complete(4)), ElementsAre(VertexSet{0, 1, 2, 3}));
  EXPECT_THAT(enumerate_maximal_cliques(Graph::from_edges(2, std::vector<Edge>{})),
              ElementsAre(VertexSet{0}, VertexSet{1}));
}

TEST(MaximalCliques, AgreeWithEnumeration) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    const int n = 1 + t % 14;
    std::bernoulli_distribution coin(0.2 + 0.1 * (t % 6));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    EXPECT_EQ(enumerate_maximal_cliques(g), testing::naive_maximal_cliques(g)) << t;
  }
}

TEST(DegeneracyOrder, IsPermutationWithBoundedBackDegree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_connected(25, 5, seed);
    const VertexSet order = degeneracy_order(g);
    ASSERT_EQ(order.size(), g.num_vertices());
    std::vector<std::size_t> pos(g.num_vertices());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    VertexSet sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < sorted.size(); ++v) EXPECT_EQ(sorted[v], v);
    int worst = 0;
    for (Vertex v : order) {
      int later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
      worst = std::max(worst, later);
    }
    EXPECT_LE(worst, g.max_degree());
  }
  // Trees are 1-degenerate.
  for (const Graph& tree : {testing::star(6), testing::path(8)}) {
    const VertexSet order = degeneracy_order(tree);
    std::vector<std::size_t> pos(tree.num_vertices());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (Vertex v : order) {
      int later = 0;
      for (Vertex w : tree.neighbors(v)) later += pos[w] > pos[v];
      EXPECT_LE(later, 1);
    }
  }
}

}  // namespace
}  // namespace alphabound
