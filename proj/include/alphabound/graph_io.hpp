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

#ifndef ALPHABOUND_GRAPH_IO_HPP_
#define ALPHABOUND_GRAPH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

// A graph relabeled onto dense indices; labels[v] is the label vertex v had in
// the input.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

// Edge list: one `u v` pair per line, `#` starts a comment, a line holding a
// single label declares an (possibly isolated) vertex. Labels are nonnegative
// integers, relabeled in increasing order.
//
// DIMACS: `c` comment lines, one `p edge n m` header, `e u v` lines with
// 1-based endpoints. labels[v] = v + 1.
//
// kAuto picks DIMACS when the first significant line starts with `c`, `p` or
// `e`. Malformed lines throw ParseError with the line number.
LabeledGraph parse_graph(std::string_view text,
                         GraphFormat format = GraphFormat::kAuto);

LabeledGraph read_graph_file(const std::filesystem::path& path,
                             GraphFormat format = GraphFormat::kAuto);

// Edge-list text using 0-based indices, preceded by `# ` comment lines for
// each line of `header`. Isolated vertices are emitted as single-label lines.
std::string write_edge_list(const Graph& g, std::string_view header = {});

std::string write_dimacs(const Graph& g);

}  // namespace alphabound

#endif  // ALPHABOUND_GRAPH_IO_HPP_
