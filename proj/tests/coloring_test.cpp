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

#include "alphabound/error.hpp"
#include "alphabound/exact.hpp"
#include "alphabound/families.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/test_graphs.hpp"

namespace alphabound {
namespace {

void expect_brooks(const Graph& g) {
  const Coloring c = brooks_coloring(g);
  EXPECT_TRUE(is_proper_coloring(g, c.colors));
  EXPECT_LE(c.num_colors, g.max_degree());
  for (int col : c.colors) {
    EXPECT_GE(col, 0);
    EXPECT_LT(col, c.num_colors);
  }
}

// Two copies of K_5 minus an edge, with vertex 10 joined to both ends of each
// missing edge. 4-regular, and 10 is the only cut vertex.
Graph regular_with_cut_vertex() {
  std::vector<Edge> edges;
  auto side = [&](Vertex base) {
    for (Vertex i = 0; i < 5; ++i) {
      for (Vertex j = i + 1; j < 5; ++j) {
        if (i == 0 && j == 1) continue;
        edges.emplace_back(base + i, base + j);
      }
    }
    edges.emplace_back(10, base + 0);
    edges.emplace_back(10, base + 1);
  };
  side(0);
  side(5);
  return Graph::from_edges(11, edges);
}

TEST(BrooksColoring, RegularTwoConnected) {
  expect_brooks(testing::petersen());
  expect_brooks(testing::complete_bipartite(3, 3));
  expect_brooks(testing::complete_bipartite(4, 4));
  expect_brooks(gen_regular_blocks(3, testing::complete(4)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    expect_brooks(gen_random_regular(10 + 2 * static_cast<int>(seed % 6), 3 + seed % 4, seed));
  }
}

TEST(BrooksColoring, RegularWithCutVertex) {
  const Graph g = regular_with_cut_vertex();
  ASSERT_TRUE(is_regular(g));
  ASSERT_EQ(g.max_degree(), 4);
  EXPECT_THAT(articulation_points(g), ::testing::ElementsAre(10));
  expect_brooks(g);
}

TEST(BrooksColoring, NonRegular) {
  expect_brooks(testing::star(3));
  expect_brooks(gen_gstar(10));
  expect_brooks(gen_chain_A(5, 4));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    expect_brooks(gen_random_connected(20, 3 + seed % 4, seed));
  }
}

TEST(BrooksColoring, Errors) {
  EXPECT_THROW(brooks_coloring(testing::complete(5)), ClassError);
  EXPECT_THROW(brooks_coloring(testing::cycle(7)), ClassError);
  EXPECT_THROW(brooks_coloring(testing::disjoint_union(testing::petersen(), testing::petersen())),
               ClassError);
}

TEST(BrooksIndependentSet, Examples) {
  const VertexSet p = brooks_independent_set(testing::petersen());
  EXPECT_TRUE(is_independent(testing::petersen(), p));
  EXPECT_GE(p.size(), 4u);
  EXPECT_GE(brooks_independent_set(testing::complete_bipartite(3, 3)).size(), 2u);
  const Graph blocks = gen_regular_blocks(3, testing::complete(4));
  EXPECT_EQ(brooks_independent_set(blocks).size(), 4u);
  EXPECT_THROW(brooks_independent_set(testing::star(3)), ClassError);
  EXPECT_THROW(brooks_independent_set(testing::complete(4)), ClassError);
}

TEST(BrooksIndependentSet, ReachesCeilingOfNOverDelta) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int delta = 3 + static_cast<int>(seed % 4);
    const Graph g = gen_random_regular(2 * delta + 2 + 2 * static_cast<int>(seed % 4), delta, seed);
    const VertexSet s = brooks_independent_set(g);
    EXPECT_TRUE(is_independent(g, s));
    EXPECT_GE(s.size() * delta, g.num_vertices());
  }
}

TEST(ArticulationPoints, Examples) {
  EXPECT_THAT(articulation_points(testing::path(4)), ::testing::ElementsAre(1, 2));
  EXPECT_TRUE(articulation_points(testing::cycle(6)).empty());
  EXPECT_THAT(articulation_points(testing::star(4)), ::testing::ElementsAre(0));
  const Graph chain = gen_chain_A(3, 3);
  EXPECT_EQ(articulation_points(chain).size(), 4u);
}

}  // namespace
}  // namespace alphabound
