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

#ifndef ALPHABOUND_EXACT_HPP_
#define ALPHABOUND_EXACT_HPP_

#include <cstdint>
#include <span>

#include "alphabound/error.hpp"
#include "alphabound/graph.hpp"

namespace alphabound {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct ExactResult {
  int alpha = 0;
  VertexSet optimal_set;  // sorted
  std::uint64_t nodes_explored = 0;
};

// Thrown when the search visits more nodes than allowed. best() is the
// largest independent set found before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, VertexSet best)
      : Error("budget exceeded (" + std::to_string(budget) + " nodes)"),
        best_(std::move(best)) {}
  const VertexSet& best() const noexcept { return best_; }

 private:
  VertexSet best_;
};

// Maximum independent set by branch and bound. Each node first takes
// simplicial vertices (closed neighborhood is a clique), prunes when the
// current size plus a greedy clique cover of the residual graph cannot beat
// the incumbent, then branches on a residual vertex of maximum degree
// (smallest index on ties): include it, or delete it.
ExactResult exact_alpha(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

bool is_independent(const Graph& g, std::span<const Vertex> s);

}  // namespace alphabound

#endif  // ALPHABOUND_EXACT_HPP_
