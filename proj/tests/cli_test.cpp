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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "alphabound/families.hpp"
#include "alphabound/graph_io.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "support/test_graphs.hpp"

namespace alphabound::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("alphabound_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Graph& g) {
    return write_text(name, write_edge_list(g));
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, CoeffsRational) {
  const Result r = invoke({"coeffs", "--delta", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "91/144\n53/144\n19/72\n5/24\n1/6\n1/6\n");
}

TEST_F(CliTest, CoeffsDecimalAndD) {
  EXPECT_EQ(invoke({"coeffs", "--delta", "3", "--format", "decimal:4"}).out,
            "0.6667\n0.3333\n0.3333\n");
  EXPECT_EQ(invoke({"coeffs", "--delta", "3", "--kind", "d"}).out, "1 - 1/e\n1/e\n1 - 2/e\n");
  EXPECT_EQ(invoke({"coeffs", "--delta", "3", "--kind", "d", "--format", "decimal:4"}).out,
            "0.6321\n0.3679\n0.2642\n");
  EXPECT_EQ(invoke({"coeffs", "--delta", "3", "--kind", "corollary1", "--c-delta", "2/7"}).out,
            "9/14\n5/14\n2/7\n");
}

TEST_F(CliTest, CoeffsJson) {
  const Result r = invoke({"coeffs", "--delta", "4", "--kind", "d", "--json"});
  ASSERT_EQ(r.code, kOk);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["kind"], "theorem5");
  ASSERT_EQ(doc["values"].size(), 4u);
  EXPECT_EQ(doc["values"][3]["a"], "-2");
  EXPECT_EQ(doc["values"][3]["b"], "6");
}

TEST_F(CliTest, CoeffsErrors) {
  EXPECT_EQ(invoke({"coeffs", "--delta", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--delta", "4", "--kind", "x"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--delta", "4", "--format", "decimal:x"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST_F(CliTest, Table) {
  const Result r = invoke({"table", "--delta", "4"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("5/8"));
  EXPECT_THAT(r.out, HasSubstr("3/8"));
  EXPECT_THAT(r.out, HasSubstr("1 - 1/e"));
  const Json doc = Json::parse(invoke({"table", "--delta", "3", "--json"}).out);
  ASSERT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["rows"][0]["c"]["exact"], "2/3");
}

TEST_F(CliTest, BoundOnGStar) {
  const std::string path = write("gstar.txt", gen_gstar(10));
  const Result r = invoke({"bound", path, "--delta-range", "5..7", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["bounds"]["theorem2"]["exact"], "75/8");
  EXPECT_EQ(doc["bounds"]["theorem4"]["6"]["exact"], "1373/144");
  EXPECT_EQ(doc["bounds"]["theorem5"]["a"], "18");
  EXPECT_EQ(doc["bounds"]["theorem5"]["b"], "-23");
  EXPECT_EQ(doc["best"], "theorem4[5]");
}

TEST_F(CliTest, ClassErrors) {
  const std::string k4 = write("k4.txt", testing::complete(4));
  const Result a = invoke({"verify", k4});
  EXPECT_EQ(a.code, kUsageError);
  EXPECT_THAT(a.err, HasSubstr("graph is K_{Δ+1}"));
  EXPECT_THAT(a.err, HasSubstr("bounds do not apply"));

  const std::string split =
      write("split.txt", testing::disjoint_union(testing::star(3), testing::star(3)));
  const Result b = invoke({"bound", split});
  EXPECT_EQ(b.code, kUsageError);
  EXPECT_THAT(b.err, HasSubstr("graph not connected"));
}

TEST_F(CliTest, ParseErrorsCarryLineNumbers) {
  const std::string bad = write_text("bad.txt", "0 1\n1 2\n2 zz\n");
  const Result r = invoke({"bound", bad});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_THAT(r.err, HasSubstr("line 3"));
  EXPECT_EQ(invoke({"bound", (dir_ / "missing.txt").string()}).code, kUsageError);
}

TEST_F(CliTest, WitnessWithTrace) {
  const std::string path = write("gstar.txt", gen_gstar(10));
  const std::string trace = (dir_ / "trace.json").string();
  const Result r = invoke({"witness", path, "--trace", trace, "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["size"], 11);
  EXPECT_EQ(doc["certified_bound"]["exact"], "75/8");
  std::ifstream in(trace);
  const Json steps = Json::parse(in);
  ASSERT_TRUE(steps.is_array());
  EXPECT_FALSE(steps.empty());
  EXPECT_EQ(steps[0]["kind"], "peel");
}

TEST_F(CliTest, ExactAndBudget) {
  const std::string path = write("petersen.txt", testing::petersen());
  const Result r = invoke({"exact", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("alpha: 4"));
  const std::string big = write("big.txt", gen_random_regular(80, 3, 1));
  EXPECT_EQ(invoke({"exact", big, "--budget", "3"}).code, kBudgetExceeded);
}

TEST_F(CliTest, BudgetFromEnvironment) {
  const std::string big = write("big.txt", gen_random_regular(80, 3, 1));
  ::setenv(kBudgetEnv, "3", 1);
  const int code = invoke({"exact", big}).code;
  ::setenv(kBudgetEnv, "nonsense", 1);
  const int bad = invoke({"exact", big}).code;
  ::unsetenv(kBudgetEnv);
  EXPECT_EQ(code, kBudgetExceeded);
  EXPECT_EQ(bad, kUsageError);
}

TEST_F(CliTest, VerifyGStar) {
  const std::string path = write("gstar.txt", gen_gstar(10));
  const Result r = invoke({"verify", path, "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["exact"]["alpha"], 11);
  EXPECT_GE(doc["witness"]["size"].get<int>(), 10);
  EXPECT_TRUE(doc["ok"].get<bool>());
  const Result text = invoke({"verify", path});
  EXPECT_THAT(text.out, HasSubstr("soundness: pass"));
}

TEST_F(CliTest, VerifyDirectoryAndThreshold) {
  write("a.txt", gen_chain_A(3, 3));
  write("b.txt", gen_attach_B(4, 2, 1));
  write("c.txt", gen_random_connected(50, 4, 5));
  const Result r = invoke({"verify", dir_.string(), "--json", "--exact-threshold", "30"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json doc = Json::parse(r.out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["exact"]["alpha"], 3);
  EXPECT_EQ(doc[1]["exact"]["alpha"], 8);
  EXPECT_TRUE(doc[2]["exact"].is_null());
}

TEST_F(CliTest, GenWritesParsableGraphs) {
  const std::string out = (dir_ / "chain.txt").string();
  ASSERT_EQ(invoke({"gen", "chain-a", "--delta", "4", "--k", "3", "-o", out}).code, kOk);
  EXPECT_EQ(read_graph_file(out).graph, gen_chain_A(4, 3));
  EXPECT_EQ(parse_graph(invoke({"gen", "gstar", "--n", "5"}).out).graph, gen_gstar(5));
  EXPECT_EQ(parse_graph(invoke({"gen", "regular-blocks", "--delta", "3", "--k", "4"}).out).graph,
            gen_regular_blocks(3, circulant_template(4, 3)));
  EXPECT_EQ(invoke({"gen", "attach-b", "--delta", "4", "--k", "2", "--j", "5"}).code, kUsageError);
  EXPECT_EQ(invoke({"gen", "regular-blocks", "--delta", "3"}).code, kUsageError);
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "random", "--n", "20", "--delta", "4", "--seed", "7"},
      {"gen", "random-regular", "--n", "16", "--delta", "3", "--seed", "7"},
      {"table", "--delta", "8"},
  };
  for (const auto& c : commands) {
    const Result a = invoke(c), b = invoke(c);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
  }
  const std::string path = write("r.txt", gen_random_connected(20, 4, 3));
  for (const char* sub : {"bound", "witness", "exact", "verify"}) {
    const Result a = invoke({sub, path, "--json"});
    const Result b = invoke({sub, path, "--json"});
    EXPECT_EQ(a.code, kOk) << sub << a.err;
    EXPECT_EQ(a.out, b.out) << sub;
  }
}

}  // namespace
}  // namespace alphabound::cli
