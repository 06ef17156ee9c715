// Copyright 2026 The gdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gdp/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gdp/trace.h"

namespace gdp {
namespace {

namespace fs = std::filesystem;

const std::string kData = GDP_TEST_DATA_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gdp_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::string Write(const std::string& name, const std::string& text) {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

std::size_t Lines(const std::string& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

TEST_F(CliTest, RunWritesTraceAndChecksInline) {
  const std::string out = Path("ring.ndjson");
  ASSERT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--dynamics",
                 "polled", "--seed", "42", "--horizon", "100", "--out", out}),
            0)
      << err_.str();
  EXPECT_EQ(Lines(out), 100u);
  EXPECT_NE(out_.str().find("21/21 invariants pass"), std::string::npos)
      << out_.str();
  EXPECT_NE(out_.str().find("eat counts"), std::string::npos);
  EXPECT_NE(out_.str().find("max hungry wait"), std::string::npos);
}

TEST_F(CliTest, PacedSingleDinerScriptReproducesGoldenTrace) {
  const std::string out = Path("t3.ndjson");
  ASSERT_EQ(Run({"run", "--graph", kData + "/single.graph", "--dynamics",
                 "clocked", "--script", kData + "/paced_single_diner.script", "--horizon",
                 "11", "--out", out}),
            0)
      << err_.str();
  EXPECT_EQ(read_file(out), read_file(kData + "/paced_single_diner.ndjson"));
}

TEST_F(CliTest, HorizonZeroIsAValidationError) {
  EXPECT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--horizon", "0"}), 2);
  EXPECT_NE(err_.str().find("horizon"), std::string::npos);
}

TEST_F(CliTest, BadArgumentsFail) {
  EXPECT_EQ(Run({"run", "--graph", Path("missing")}), 2);
  EXPECT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--mode", "x"}), 2);
  EXPECT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--order",
                 "shuffled:abc"}),
            2);
  EXPECT_EQ(Run({"frobnicate"}), 2);
  EXPECT_EQ(Run({"--help"}), 0);
}

TEST_F(CliTest, CheckCleanRunListsAllPasses) {
  EXPECT_EQ(Run({"check", "--graph", kData + "/ring5.graph", "--horizon", "300",
                 "--max-eat", "2"}),
            0);
  EXPECT_NE(out_.str().find("pass safety"), std::string::npos);
  EXPECT_NE(out_.str().find("pass starvation-freedom"), std::string::npos);
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, CheckCorruptedTraceNamesSafetyAndStep) {
  const std::string out = Path("ring.ndjson");
  ASSERT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--horizon", "30",
                 "--out", out}),
            0);
  std::ifstream in(out);
  std::string text, line;
  for (int i = 0; std::getline(in, line); ++i) {
    if (i == 12) {
      const auto at = line.find("\"act\":\"");
      line.replace(at + 7, 5, "eeeee");
    }
    text += line + "\n";
  }
  const std::string bad = Write("bad.ndjson", text);
  EXPECT_EQ(Run({"check", "--graph", kData + "/ring5.graph", "--trace", bad}), 1);
  EXPECT_NE(out_.str().find("FAIL safety at step 12"), std::string::npos)
      << out_.str();
}

TEST_F(CliTest, CheckCompareRunsBothArchitectures) {
  EXPECT_EQ(Run({"check", "--graph", kData + "/ring5.graph", "--horizon", "200",
                 "--compare", "--order", "shuffled:3"}),
            0)
      << out_.str();
  EXPECT_NE(out_.str().find("centralized vs distributed: equal"),
            std::string::npos);
}

TEST_F(CliTest, BothModesShareOneFile) {
  const std::string out = Path("both.ndjson");
  const std::string csv = Path("both.csv");
  ASSERT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--mode", "both",
                 "--horizon", "50", "--out", out, "--csv", csv, "--order",
                 "descending"}),
            0);
  EXPECT_EQ(Lines(out), 100u);
  EXPECT_EQ(Lines(csv), 1u + 2u * 50u * 5u);
  EXPECT_EQ(Run({"check", "--graph", kData + "/ring5.graph", "--trace", out,
                 "--max-eat", "3"}),
            0)
      << out_.str();
  EXPECT_NE(out_.str().find("polled-centralized vs polled-distributed: equal"),
            std::string::npos);
}

TEST_F(CliTest, CompareSampledAndArchitectures) {
  EXPECT_EQ(Run({"compare", "--graph", kData + "/ring5.graph", "--horizon", "200",
                 "--sampled", "--mode", "both"}),
            0)
      << out_.str();
  EXPECT_NE(out_.str().find("odd clocked cycles: equal"), std::string::npos);
  EXPECT_EQ(Run({"compare", "--graph", kData + "/ring5.graph", "--horizon", "200",
                 "--dynamics", "clocked"}),
            0);
}

TEST_F(CliTest, OrderFileIsHonoured) {
  const std::string order = Write("order.txt", "1: 5 2\n2: 3 1\n3: 4 2\n4: 5 3\n5: 1 4\n");
  const std::string out = Path("o.ndjson");
  ASSERT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--mode",
                 "distributed", "--order", order, "--horizon", "5", "--out", out}),
            0)
      << err_.str();
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  EXPECT_NE(first.find("\"order\":[[5,2],[3,1],[4,2],[5,3],[1,4]]"),
            std::string::npos)
      << first;
  const std::string bad = Write("bad_order.txt", "1: 2\n");
  EXPECT_EQ(Run({"run", "--graph", kData + "/ring5.graph", "--mode",
                 "distributed", "--order", bad}),
            2);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  const std::string cfg = Write(
      "run.toml", "graph = \"" + kData + "/ring5.graph\"\nhorizon = 40\nseed = 9\n");
  const std::string out = Path("c.ndjson");
  ASSERT_EQ(Run({"run", "--config", cfg, "--out", out}), 0) << err_.str();
  EXPECT_EQ(Lines(out), 40u);
  ASSERT_EQ(Run({"run", "--config", cfg, "--horizon", "7", "--out", out}), 0);
  EXPECT_EQ(Lines(out), 7u);
}

TEST_F(CliTest, BehavioursCompareSystems) {
  EXPECT_EQ(Run({"behaviours", "--system", "Q", "--against", "P", "--horizon",
                 "8"}),
            0);
  EXPECT_NE(out_.str().find("horizon 8: equal (128 vs 128 traces)"),
            std::string::npos);
  EXPECT_EQ(Run({"behaviours", "--system", "Q", "--horizon", "3"}), 0);
  EXPECT_NE(out_.str().find("4 traces\nthe\nthh\ntth\nttt\n"), std::string::npos)
      << out_.str();
  EXPECT_EQ(Run({"behaviours", "--system", "Q", "--against", "T", "--horizon",
                 "2"}),
            1);
  EXPECT_EQ(Run({"behaviours", "--system", "Z"}), 2);
}

TEST_F(CliTest, ScriptedStreamNeedsEnoughRows) {
  EXPECT_EQ(Run({"run", "--graph", kData + "/single.graph", "--script",
                 kData + "/paced_single_diner.script", "--horizon", "12"}),
            2);
  EXPECT_EQ(Run({"run", "--graph", kData + "/single.graph", "--stream",
                 "scripted"}),
            2);
}

}  // namespace
}  // namespace gdp
