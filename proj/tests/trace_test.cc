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

#include "gdp/trace.h"

#include <gtest/gtest.h>

#include <sstream>

#include "gdp/error.h"
#include "support/generators.h"

namespace gdp {
namespace {

using testing::Rng;

std::string ErrorOf(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGraphTest, SingleEdge) {
  const ConflictGraph g = parse_graph("n 2\n1 2\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseGraphTest, FiveRing) {
  const ConflictGraph g = parse_graph("n 5\n1 2\n2 3\n3 4\n4 5\n5 1");
  EXPECT_EQ(g.edge_count(), 5u);
  for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(g.neighbours(v).size(), 2u);
  EXPECT_TRUE(g.warnings().empty());
}

TEST(ParseGraphTest, SelfLoopCitesIrreflexivityAndLine) {
  const std::string what = ErrorOf("n 3\n1 1");
  EXPECT_NE(what.find("irreflexiv"), std::string::npos) << what;
  EXPECT_NE(what.find("line 2"), std::string::npos) << what;
}

TEST(ParseGraphTest, MalformedLinesCarryLineNumbers) {
  EXPECT_NE(ErrorOf("n 3\n# comment\n1 2\n1 x\n").find("line 4"),
            std::string::npos);
  EXPECT_NE(ErrorOf("n 3\n1 4\n").find("out of range"), std::string::npos);
  EXPECT_NE(ErrorOf("v 3\n").find("line 1"), std::string::npos);
  EXPECT_NE(ErrorOf("n 3\n1 2 3\n").find("line 2"), std::string::npos);
  EXPECT_NE(ErrorOf("\n\n").find("n <count>"), std::string::npos);
  EXPECT_NE(ErrorOf("n 0\n").find("positive"), std::string::npos);
}

TEST(ParseGraphTest, DuplicatesAndDisconnectionWarn) {
  const ConflictGraph g = parse_graph("n 4\n1 2\n2 1\n3 4\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.warnings().size(), 2u);
}

TEST(ParseScriptTest, RowsAndWidth) {
  const auto rows = parse_script("0.\n# skip\n11\n", 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(choice_string(rows[0]), "0.");
  EXPECT_THROW(parse_script("0\n", 2), InvalidInput);
  EXPECT_THROW(parse_script("0x\n", 2), InvalidInput);
}

TEST(TraceJsonTest, FieldOrderIsFixed) {
  const ConflictGraph g(2, {{1, 2}});
  StepRecord rec;
  rec.step = 4;
  rec.activity = parse_activity_map("he");
  rec.choice = parse_choice_map(".1");
  rec.command = parse_command_map("0p");
  rec.priority = initial_priority(g);
  rec.mode = {Dynamics::polled, Architecture::centralized};
  EXPECT_EQ(record_json(g, rec),
            R"({"step":4,"act":"he","choice":".1","cmd":"0p","prio":["2>1"],)"
            R"("mode":"polled-centralized"})");
}

TEST(TraceJsonTest, RoundTripsRunsFieldForField) {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const auto g = testing::random_connected_graph(rng, 2, 8);
    RunOptions o;
    o.horizon = 100;
    o.dynamics = i % 2 ? Dynamics::clocked : Dynamics::polled;
    o.architecture = i % 3 ? Architecture::distributed : Architecture::centralized;
    o.order = NeighbourOrder::Shuffled(g, rng());
    const Trace t = run(g, o, ChoiceStream::BoundedEating(rng(), 3));
    std::stringstream buf;
    write_trace(buf, g, t);
    const ParsedTrace back = read_trace(buf, g);
    EXPECT_EQ(back.records, t.records);
    EXPECT_EQ(back.order, t.order);
  }
}

TEST(TraceJsonTest, BadRecordsCiteTheirLine) {
  const ConflictGraph g(1, {});
  std::stringstream buf(
      R"({"step":0,"act":"t","choice":".","cmd":"p","prio":[],"mode":"polled-centralized"})"
      "\n{\"step\":1}\n");
  try {
    read_trace(buf, g);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(TraceJsonTest, SelectModeFiltersInOrder) {
  const ConflictGraph g(2, {{1, 2}});
  RunOptions o;
  o.horizon = 5;
  auto a = run_polled(g, o, ChoiceStream::Seeded(1)).records;
  o.architecture = Architecture::distributed;
  const auto b = run_polled(g, o, ChoiceStream::Seeded(1)).records;
  a.insert(a.end(), b.begin(), b.end());
  EXPECT_EQ(select_mode(a, {Dynamics::polled, Architecture::distributed}), b);
}

TEST(CsvTest, OneRowPerVertexAndStep) {
  const ConflictGraph g(3, {{1, 2}, {2, 3}});
  RunOptions o;
  o.horizon = 4;
  const Trace t = run_polled(g, o, ChoiceStream::Seeded(1));
  std::stringstream buf;
  write_csv(buf, g, t.records);
  std::string line;
  std::getline(buf, line);
  EXPECT_EQ(line, "step,mode,vertex,act,choice,cmd,subordinates");
  int rows = 0;
  while (std::getline(buf, line)) ++rows;
  EXPECT_EQ(rows, 12);
}

}  // namespace
}  // namespace gdp
