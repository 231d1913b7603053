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

#include "alphabound/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "alphabound/error.hpp"

namespace alphabound {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_label(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a nonnegative integer, got '" +
                         std::string(token) + "'",
                     line_no);
  }
  return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
  std::vector<std::uint64_t> labels;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) return;
    if (tokens.size() > 2) {
      throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) +
                           " fields",
                       line_no);
    }
    const std::uint64_t u = parse_label(tokens[0], line_no);
    labels.push_back(u);
    if (tokens.size() == 2) {
      const std::uint64_t v = parse_label(tokens[1], line_no);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
      labels.push_back(v);
      raw_edges.emplace_back(u, v);
    }
  });
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index_of = [&](std::uint64_t label) {
    return static_cast<Vertex>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& [u, v] : raw_edges) edges.emplace_back(index_of(u), index_of(v));
  return {Graph::from_edges(labels.size(), edges), std::move(labels)};
}

LabeledGraph parse_dimacs(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError("duplicate 'p' header", line_no);
      if (tokens.size() != 4) {
        throw ParseError("expected 'p edge <n> <m>'", line_no);
      }
      n = parse_label(tokens[2], line_no);
      parse_label(tokens[3], line_no);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError("'e' line before 'p' header", line_no);
      if (tokens.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no);
      const std::uint64_t u = parse_label(tokens[1], line_no);
      const std::uint64_t v = parse_label(tokens[2], line_no);
      for (std::uint64_t x : {u, v}) {
        if (x < 1 || x > *n) {
          throw ParseError("vertex " + std::to_string(x) + " outside 1.." +
                               std::to_string(*n),
                           line_no);
        }
      }
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      return;
    }
    throw ParseError("unknown DIMACS line type '" + std::string(tokens[0]) + "'",
                     line_no);
  });
  if (!n) throw ParseError("missing 'p edge <n> <m>' header", 0);
  std::vector<std::uint64_t> labels(*n);
  for (std::uint64_t v = 0; v < *n; ++v) labels[v] = v + 1;
  return {Graph::from_edges(*n, edges), std::move(labels)};
}

bool looks_like_dimacs(std::string_view text) {
  bool dimacs = false;
  bool decided = false;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (decided) return;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].starts_with('#')) return;
    dimacs = tokens[0] == "c" || tokens[0] == "p" || tokens[0] == "e";
    decided = true;
  });
  return dimacs;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = looks_like_dimacs(text) ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
  }
  return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

LabeledGraph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str(), format);
  } catch (const ParseError& e) {
    throw e.with_prefix(path.string() + ": ");
  }
}

std::string write_edge_list(const Graph& g, std::string_view header) {
  std::ostringstream out;
  for_each_line(header, [&](std::string_view line, std::size_t) {
    if (!header.empty()) out << "# " << line << '\n';
  });
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out << v << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace alphabound
