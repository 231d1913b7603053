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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphabound/bounds.hpp"
#include "alphabound/coeffs.hpp"
#include "alphabound/error.hpp"
#include "alphabound/exact.hpp"
#include "alphabound/families.hpp"
#include "alphabound/graph_io.hpp"
#include "alphabound/witness.hpp"

namespace alphabound::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kDefaultDigits = 12;
constexpr std::size_t kDefaultExactThreshold = 30;

struct RunConfig {
  std::string input;
  std::string output;
  std::string trace_path;
  int delta = 0;
  std::string kind = "c";
  std::string c_delta;
  std::string format = "rational";
  std::string delta_range;
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t exact_threshold = kDefaultExactThreshold;
  int digits = kDefaultDigits;
  bool json = false;

  // gen parameters
  int n = 0;
  int k = 0;
  int j = 0;
  std::uint64_t seed = 0;
  std::string template_path;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string(kBudgetEnv) + " is not a node count: '" + env + "'");
    }
  }
  return kDefaultNodeBudget;
}

std::optional<std::pair<int, int>> parse_delta_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int single = std::stoi(text);
      return std::pair{single, single};
    }
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument(text);
    return std::pair{lo, hi};
  } catch (const std::exception&) {
    throw Error("--delta-range expects A..B with A <= B, got '" + text + "'");
  }
}

Json rational_json(const Rational& r, int digits) {
  return Json{{"exact", to_string(r)}, {"decimal", to_decimal(r, digits)}};
}

Json euler_json(const EulerLinear& x, int digits) {
  return Json{{"exact", x.to_string()},
              {"a", to_string(x.rational_part())},
              {"b", to_string(x.inverse_e_part())},
              {"decimal", x.to_decimal(digits)}};
}

Json labeled(const VertexSet& vs, const LabeledGraph& lg) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(lg.labels[v]);
  return out;
}

std::string join_labels(const VertexSet& vs, const LabeledGraph& lg) {
  std::ostringstream s;
  for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << lg.labels[vs[i]];
  return s.str();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

std::string graph_summary(const Graph& g) {
  return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) +
         " Δ=" + std::to_string(g.max_degree());
}

// ---------------------------------------------------------------------------
// coeffs

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  int digits = -1;
  if (cfg.format.rfind("decimal", 0) == 0) {
    digits = kDefaultDigits;
    if (cfg.format.size() > 7) {
      if (cfg.format[7] != ':') throw Error("--format expects rational or decimal:DIGITS");
      digits = std::stoi(cfg.format.substr(8));
    }
  } else if (cfg.format != "rational") {
    throw Error("--format expects rational or decimal:DIGITS, got '" + cfg.format + "'");
  }
  const int json_digits = digits < 0 ? kDefaultDigits : digits;

  Json doc;
  std::vector<std::string> lines;
  if (cfg.kind == "d") {
    const EulerSequence d = d_sequence(cfg.delta);
    doc = {{"kind", to_string(d.kind)}, {"delta", d.delta}, {"values", Json::array()}};
    for (int i = 1; i <= d.size(); ++i) {
      lines.push_back(digits < 0 ? d[i].to_string() : d[i].to_decimal(digits));
      Json v = euler_json(d[i], json_digits);
      v["index"] = i;
      doc["values"].push_back(std::move(v));
    }
  } else if (cfg.kind == "c" || cfg.kind == "corollary1") {
    RationalSequence c = cfg.kind == "c" ? c_sequence(cfg.delta) : RationalSequence{};
    if (cfg.kind == "corollary1") {
      if (cfg.delta < 3) c = c_sequence(cfg.delta);  // raises the Δ error
      const Rational c_delta = cfg.c_delta.empty() ? make_rational(2, 2 * cfg.delta + 1)
                                                   : parse_rational(cfg.c_delta);
      c = corollary1_sequence(cfg.delta, c_delta);
    }
    doc = {{"kind", to_string(c.kind)}, {"delta", c.delta}};
    if (cfg.kind == "corollary1") doc["c_delta"] = to_string(c[c.delta]);
    doc["values"] = Json::array();
    for (int i = 1; i <= c.size(); ++i) {
      lines.push_back(digits < 0 ? to_string(c[i]) : to_decimal(c[i], digits));
      Json v = rational_json(c[i], json_digits);
      v["index"] = i;
      doc["values"].push_back(std::move(v));
    }
  } else {
    throw Error("--kind expects c, d or corollary1, got '" + cfg.kind + "'");
  }

  if (cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& line : lines) out << line << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const RationalSequence c = c_sequence(cfg.delta);
  const EulerSequence d = d_sequence(cfg.delta);
  Json doc = {{"delta", cfg.delta}, {"rows", Json::array()}};
  std::vector<std::vector<std::string>> rows{
      {"i", "c_i", "c_i (decimal)", "d_i", "d_i (decimal)", "|c_i - d_i|"}};
  for (int i = 1; i <= cfg.delta; ++i) {
    const EulerLinear gap = (EulerLinear(c[i]) - d[i]).abs();
    rows.push_back({std::to_string(i), to_string(c[i]), to_decimal(c[i], cfg.digits),
                    d[i].to_string(), d[i].to_decimal(cfg.digits),
                    gap.to_decimal(cfg.digits)});
    doc["rows"].push_back({{"index", i},
                           {"c", rational_json(c[i], cfg.digits)},
                           {"d", euler_json(d[i], cfg.digits)},
                           {"gap", euler_json(gap, cfg.digits)}});
  }
  if (cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    print_table(out, rows);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// bound

std::vector<std::vector<std::string>> bound_rows(const BoundReport& r, int digits) {
  std::vector<std::vector<std::string>> rows{{"bound", "exact", "decimal"}};
  auto rational_row = [&](const std::string& name, const Rational& v) {
    rows.push_back({name, to_string(v), to_decimal(v, digits)});
  };
  rational_row("brooks", r.bound1);
  rational_row("theorem2", r.bound2);
  for (const auto& [delta, value] : r.bound3) {
    rational_row("theorem4[" + std::to_string(delta) + "]", value);
  }
  rows.push_back({"theorem5", r.bound4.to_string(), r.bound4.to_decimal(digits)});
  rational_row("caro_wei", r.caro_wei);
  return rows;
}

Json bound_json(const BoundReport& r, int digits) {
  Json doc = {{"brooks", rational_json(r.bound1, digits)},
              {"theorem2", rational_json(r.bound2, digits)},
              {"theorem4", Json::object()}};
  for (const auto& [delta, value] : r.bound3) {
    doc["theorem4"][std::to_string(delta)] = rational_json(value, digits);
  }
  doc["theorem5"] = euler_json(r.bound4, digits);
  doc["caro_wei"] = rational_json(r.caro_wei, digits);
  return doc;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const LabeledGraph lg = read_graph_file(cfg.input);
  const BoundReport report =
      compute_bounds(lg.graph, cfg.input, parse_delta_range(cfg.delta_range));
  if (cfg.json) {
    Json doc = {{"graph", cfg.input},
                {"n", lg.graph.num_vertices()},
                {"m", lg.graph.num_edges()},
                {"delta_max", report.delta_max},
                {"bounds", bound_json(report, cfg.digits)},
                {"best", report.best}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << cfg.input << " (" << graph_summary(lg.graph) << ")\n";
  print_table(out, bound_rows(report, cfg.digits));
  out << "best: " << report.best << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// witness

Json checks_json(const WitnessChecks& c) {
  return {{"independent", c.independent},
          {"certified", c.certified},
          {"peel_identity", c.peel_identity},
          {"accounting", c.accounting},
          {"local_steps", c.local_steps},
          {"isolated_independent", c.isolated_independent}};
}

Json trace_json(const WitnessResult& w, const LabeledGraph& lg) {
  Json steps = Json::array();
  for (const TraceStep& s : w.trace) {
    Json step = {{"kind", to_string(s.kind)},
                 {"component_size", s.component_size},
                 {"component_min", lg.labels[s.component_min]}};
    if (s.kind == StepKind::kPeel) {
      step["u"] = lg.labels[s.u];
      step["degree"] = s.degree;
      step["neighbors"] = labeled(s.neighbors, lg);
      step["isolated"] = labeled(s.isolated, lg);
      Json spawned = Json::array();
      for (const VertexSet& c : s.spawned) spawned.push_back(labeled(c, lg));
      step["spawned"] = std::move(spawned);
      step["peel_weight"] = to_string(s.peel_weight);
    }
    step["selected"] = labeled(s.selected, lg);
    step["weight"] = to_string(s.weight);
    steps.push_back(std::move(step));
  }
  return steps;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const LabeledGraph lg = read_graph_file(cfg.input);
  const WitnessResult w = witness_theorem2(lg.graph);
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, trace_json(w, lg).dump(2) + "\n");
  if (cfg.json) {
    Json doc = {{"graph", cfg.input},
                {"independent_set", labeled(w.independent_set, lg)},
                {"size", w.independent_set.size()},
                {"certified_bound", rational_json(w.certified_bound, cfg.digits)},
                {"checks", checks_json(w.checks)},
                {"ok", w.checks.all()}};
    out << doc.dump(2) << '\n';
  } else {
    out << "independent set: " << join_labels(w.independent_set, lg) << '\n'
        << "size: " << w.independent_set.size() << '\n'
        << "certified bound: " << to_string(w.certified_bound) << " ("
        << to_decimal(w.certified_bound, cfg.digits) << ")\n";
    const Json checks = checks_json(w.checks);
    for (const auto& [name, value] : checks.items()) {
      out << "check " << name << ": " << (value.get<bool>() ? "pass" : "FAIL") << '\n';
    }
  }
  return w.checks.all() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// exact

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const LabeledGraph lg = read_graph_file(cfg.input);
  try {
    const ExactResult r = exact_alpha(lg.graph, cfg.budget);
    if (cfg.json) {
      Json doc = {{"graph", cfg.input},
                  {"alpha", r.alpha},
                  {"optimal_set", labeled(r.optimal_set, lg)},
                  {"nodes_explored", r.nodes_explored}};
      out << doc.dump(2) << '\n';
    } else {
      out << "alpha: " << r.alpha << '\n'
          << "set: " << join_labels(r.optimal_set, lg) << '\n'
          << "nodes: " << r.nodes_explored << '\n';
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    if (cfg.json) {
      Json doc = {{"graph", cfg.input},
                  {"error", e.what()},
                  {"best_size", e.best().size()},
                  {"best_set", labeled(e.best(), lg)}};
      out << doc.dump(2) << '\n';
    } else {
      out << e.what() << "; best so far: " << e.best().size() << '\n';
    }
    return kBudgetExceeded;
  }
}

// ---------------------------------------------------------------------------
// gen

int emit_graph(const RunConfig& cfg, const Graph& g, const std::string& description,
               std::ostream& out) {
  const std::string text =
      write_edge_list(g, "alphabound gen " + description + "\n" + graph_summary(g));
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
  } else {
    write_file(cfg.output, text);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOutcome {
  Json record;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool checks_ok = true;
};

VerifyOutcome verify_one(const RunConfig& cfg, const std::string& path) {
  VerifyOutcome v;
  const LabeledGraph lg = read_graph_file(path);
  const Graph& g = lg.graph;
  const BoundReport report = compute_bounds(g, path, parse_delta_range(cfg.delta_range));
  const WitnessResult w = witness_theorem2(g);
  const EulerLinear witness_size(Rational(w.independent_set.size()));

  v.rows = bound_rows(report, cfg.digits);
  v.record = {{"graph", path},
              {"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"delta_max", report.delta_max},
              {"bounds", bound_json(report, cfg.digits)},
              {"best", report.best},
              {"witness",
               {{"size", w.independent_set.size()},
                {"independent_set", labeled(w.independent_set, lg)},
                {"checks", checks_json(w.checks)}}}};
  Json failures = Json::array();
  if (!w.checks.all()) failures.push_back("witness runtime checks");
  v.notes.push_back("witness: size " + std::to_string(w.independent_set.size()) +
                    " >= " + to_string(w.certified_bound) + " (" +
                    (w.checks.all() ? "checks pass" : "checks FAIL") + ")");

  if (g.num_vertices() <= cfg.exact_threshold) {
    try {
      const ExactResult ex = exact_alpha(g, cfg.budget);
      const EulerLinear alpha(Rational(ex.alpha));
      v.record["exact"] = {{"alpha", ex.alpha}, {"nodes_explored", ex.nodes_explored}};
      auto expect_below = [&](const EulerLinear& bound, const std::string& name) {
        if (bound > alpha) failures.push_back(name + " exceeds alpha");
      };
      expect_below(report.bound1, "brooks");
      expect_below(report.bound2, "theorem2");
      for (const auto& [delta, value] : report.bound3) {
        expect_below(value, "theorem4[" + std::to_string(delta) + "]");
      }
      expect_below(report.bound4, "theorem5");
      expect_below(report.caro_wei, "caro_wei");
      expect_below(witness_size, "witness size");
      v.notes.push_back("exact alpha: " + std::to_string(ex.alpha) + " (nodes " +
                        std::to_string(ex.nodes_explored) + ")");
    } catch (const BudgetExceeded& e) {
      v.record["exact"] = {{"error", e.what()}, {"best_size", e.best().size()}};
      v.notes.push_back(std::string("exact alpha: ") + e.what());
    }
  } else {
    v.record["exact"] = nullptr;
    v.notes.push_back("exact alpha: skipped (n > " + std::to_string(cfg.exact_threshold) +
                      ")");
  }
  v.checks_ok = failures.empty();
  v.record["failures"] = failures;
  v.record["ok"] = v.checks_ok;
  for (const auto& f : failures) v.notes.push_back("FAIL: " + f.get<std::string>());
  v.notes.push_back(std::string("soundness: ") + (v.checks_ok ? "pass" : "FAIL"));
  return v;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  if (fs::is_directory(cfg.input)) {
    for (const auto& entry : fs::directory_iterator(cfg.input)) {
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(cfg.input);
  }

  bool any_failed = false;
  bool any_error = false;
  Json all = Json::array();
  for (const auto& path : files) {
    try {
      VerifyOutcome v = verify_one(cfg, path);
      any_failed = any_failed || !v.checks_ok;
      if (cfg.json) {
        all.push_back(std::move(v.record));
      } else {
        out << "== " << path << '\n';
        print_table(out, v.rows);
        for (const auto& note : v.notes) out << note << '\n';
      }
    } catch (const Error& e) {
      any_error = true;
      err << path << ": " << e.what() << '\n';
      if (cfg.json) all.push_back({{"graph", path}, {"error", e.what()}, {"ok", false}});
    }
  }
  if (cfg.json) out << (files.size() == 1 && !fs::is_directory(cfg.input) ? all[0] : all).dump(2) << '\n';
  if (any_failed) return kCheckFailed;
  return any_error ? kUsageError : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.budget = default_budget();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  CLI::App app{"Degree-weighted lower bounds on the independence number", "alphabound"};
  app.require_subcommand(1);
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.input, "Graph file (edge list or DIMACS)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Emit JSON instead of a table");
    sub->add_option("--digits", cfg.digits, "Fractional digits in decimal output")
        ->check(CLI::Range(0, 200));
  };

  auto* coeffs = app.add_subcommand("coeffs", "Print a coefficient sequence");
  coeffs->add_option("--delta", cfg.delta, "Δ (or Δ′ for --kind d)")->required();
  coeffs->add_option("--kind", cfg.kind, "c, d, or corollary1")
      ->check(CLI::IsMember({"c", "d", "corollary1"}));
  coeffs->add_option("--c-delta", cfg.c_delta, "c_Δ for --kind corollary1, as P/Q");
  coeffs->add_option("--format", cfg.format, "rational or decimal:DIGITS");
  coeffs->add_flag("--json", cfg.json, "Emit JSON");

  auto* table = app.add_subcommand("table", "Tabulate c_i and d_i with their gap");
  table->add_option("--delta", cfg.delta, "Δ")->required();
  add_output_flags(table);

  auto* bound = app.add_subcommand("bound", "Evaluate every lower bound on a graph");
  add_graph_input(bound);
  bound->add_option("--delta-range", cfg.delta_range, "Δ values A..B for the truncated bound");
  add_output_flags(bound);

  auto* witness = app.add_subcommand("witness", "Build an independent set certifying the bound");
  add_graph_input(witness);
  witness->add_option("--trace", cfg.trace_path, "Write the step trace as JSON");
  add_output_flags(witness);

  auto* exact = app.add_subcommand("exact", "Compute α exactly by branch and bound");
  add_graph_input(exact);
  exact->add_option("--budget", cfg.budget, "Node budget (default $ALPHABOUND_BUDGET or 1e8)");
  exact->add_flag("--json", cfg.json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Check bounds, witness and α on a file or directory");
  verify->add_option("path", cfg.input, "Graph file or directory")
      ->required()
      ->check(CLI::ExistingPath);
  verify->add_option("--delta-range", cfg.delta_range, "Δ values A..B for the truncated bound");
  verify->add_option("--exact-threshold", cfg.exact_threshold,
                     "Run the exact solver when n is at most this");
  verify->add_option("--budget", cfg.budget, "Node budget for the exact solver");
  add_output_flags(verify);

  auto* gen = app.add_subcommand("gen", "Generate an extremal or random graph");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  auto* gen_blocks = gen->add_subcommand("regular-blocks", "K_Δ blow-up of a Δ-regular template");
  gen_blocks->add_option("--delta", cfg.delta, "Δ")->required();
  gen_blocks->add_option("--k", cfg.k, "Circulant template order");
  gen_blocks->add_option("--template", cfg.template_path, "Template graph file")
      ->check(CLI::ExistingFile);
  auto* gen_chain = gen->add_subcommand("chain-a", "Chain of k copies of K_Δ");
  gen_chain->add_option("--delta", cfg.delta, "Δ")->required();
  gen_chain->add_option("--k", cfg.k, "Number of blocks")->required();
  auto* gen_attach = gen->add_subcommand("attach-b", "Chain with pendant K_{j+1} attachments");
  gen_attach->add_option("--delta", cfg.delta, "Δ")->required();
  gen_attach->add_option("--k", cfg.k, "Number of blocks")->required();
  gen_attach->add_option("--j", cfg.j, "Attached clique K_{j+1}")->required();
  auto* gen_gstar_cmd = gen->add_subcommand("gstar", "Cycle with n+1 pendant edges");
  gen_gstar_cmd->add_option("--n", cfg.n, "Cycle length")->required();
  auto* gen_random = gen->add_subcommand("random", "Random connected graph of maximum degree Δ");
  gen_random->add_option("--n", cfg.n, "Vertices")->required();
  gen_random->add_option("--delta", cfg.delta, "Maximum degree")->required();
  gen_random->add_option("--seed", cfg.seed, "Seed");
  auto* gen_regular = gen->add_subcommand("random-regular", "Random connected Δ-regular graph");
  gen_regular->add_option("--n", cfg.n, "Vertices")->required();
  gen_regular->add_option("--delta", cfg.delta, "Degree")->required();
  gen_regular->add_option("--seed", cfg.seed, "Seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (witness->parsed()) return cmd_witness(cfg, out);
    if (exact->parsed()) return cmd_exact(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (gen_blocks->parsed()) {
      if (cfg.template_path.empty() == (cfg.k == 0)) {
        throw Error("regular-blocks needs exactly one of --k or --template");
      }
      const Graph tmpl = cfg.template_path.empty() ? circulant_template(cfg.k, cfg.delta)
                                                   : read_graph_file(cfg.template_path).graph;
      return emit_graph(cfg, gen_regular_blocks(cfg.delta, tmpl),
                        "regular-blocks --delta " + std::to_string(cfg.delta), out);
    }
    if (gen_chain->parsed()) {
      return emit_graph(cfg, gen_chain_A(cfg.delta, cfg.k),
                        "chain-a --delta " + std::to_string(cfg.delta) + " --k " +
                            std::to_string(cfg.k),
                        out);
    }
    if (gen_attach->parsed()) {
      return emit_graph(cfg, gen_attach_B(cfg.delta, cfg.k, cfg.j),
                        "attach-b --delta " + std::to_string(cfg.delta) + " --k " +
                            std::to_string(cfg.k) + " --j " + std::to_string(cfg.j),
                        out);
    }
    if (gen_gstar_cmd->parsed()) {
      return emit_graph(cfg, gen_gstar(cfg.n), "gstar --n " + std::to_string(cfg.n), out);
    }
    if (gen_random->parsed()) {
      return emit_graph(cfg, gen_random_connected(cfg.n, cfg.delta, cfg.seed),
                        "random --n " + std::to_string(cfg.n) + " --delta " +
                            std::to_string(cfg.delta) + " --seed " + std::to_string(cfg.seed),
                        out);
    }
    if (gen_regular->parsed()) {
      return emit_graph(cfg, gen_random_regular(cfg.n, cfg.delta, cfg.seed),
                        "random-regular --n " + std::to_string(cfg.n) + " --delta " +
                            std::to_string(cfg.delta) + " --seed " + std::to_string(cfg.seed),
                        out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace alphabound::cli
