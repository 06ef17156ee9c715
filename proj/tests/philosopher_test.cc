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

#include "gdp/philosopher.h"

#include <gtest/gtest.h>

#include "gdp/error.h"

namespace gdp {
namespace {

// Expected next activities, transcribed from the defining clauses. Rows run
// over a in t,h,e; within a row, the remaining arguments in declaration order.
constexpr const char* kChoiceTable = "thheet";             // b: 0,1
constexpr const char* kControlledTable = "tthhthhheeheeettet";  // b, then c
constexpr const char* kPacedTable =
    "ttttthhthhhhhheeheeeeeettet";  // b: .,0,1 then c

Activity A(char ch) { return parse_activity(ch); }

TEST(PhilosopherTest, ChoiceFunctionAllSixCases) {
  int i = 0;
  for (Activity a : kActivities) {
    for (Choice b : kChoices) {
      EXPECT_EQ(choose_next(a, b), A(kChoiceTable[i])) << i;
      ++i;
    }
  }
}

TEST(PhilosopherTest, ControlledFunctionAllEighteenCases) {
  int i = 0;
  for (Activity a : kActivities) {
    for (Choice b : kChoices) {
      for (Command c : kCommands) {
        EXPECT_EQ(controlled_next(a, b, c), A(kControlledTable[i])) << i;
        ++i;
      }
    }
  }
}

TEST(PhilosopherTest, PacedFunctionAllTwentySevenCases) {
  const std::string table = kPacedTable;
  ASSERT_EQ(table.size(), 27u);
  int i = 0;
  for (Activity a : kActivities) {
    for (MaybeChoice b : kMaybeChoices) {
      for (Command c : kCommands) {
        EXPECT_EQ(paced_next(a, b, c), A(table[i])) << i;
        ++i;
      }
    }
  }
  EXPECT_EQ(i, 27);
}

TEST(PhilosopherTest, AbsentChoiceIgnoresCommand) {
  for (Activity a : kActivities) {
    for (Command c : kCommands) EXPECT_EQ(paced_next(a, std::nullopt, c), a);
  }
}

TEST(PhilosopherTest, SingleDinerControllerThreeCases) {
  EXPECT_EQ(single_diner_command(Activity::thinking), Command::pass);
  EXPECT_EQ(single_diner_command(Activity::hungry), Command::force1);
  EXPECT_EQ(single_diner_command(Activity::eating), Command::pass);
}

TEST(PhilosopherTest, HungryUnderControlEatsNext) {
  for (Choice b : kChoices) {
    EXPECT_EQ(controlled_next(Activity::hungry, b,
                              single_diner_command(Activity::hungry)),
              Activity::eating);
  }
}

TEST(EncodingTest, RoundTripsCharacters) {
  for (Activity a : kActivities) EXPECT_EQ(parse_activity(activity_char(a)), a);
  for (MaybeChoice b : kMaybeChoices) EXPECT_EQ(parse_choice(choice_char(b)), b);
  for (Command c : kCommands) EXPECT_EQ(parse_command(command_char(c)), c);
  EXPECT_EQ(command_label(Command::force0), "f0");
  EXPECT_THROW(parse_activity('x'), InvalidInput);
  EXPECT_THROW(parse_choice('2'), InvalidInput);
  EXPECT_THROW(parse_command('q'), InvalidInput);
}

TEST(ExtensionalTest, SystemsAgreeWithTheirFunctions) {
  const SystemSpec p = choice_philosopher();
  const SystemSpec m = controlled_philosopher();
  const SystemSpec s = paced_philosopher();
  const SystemSpec c = single_diner_controller();
  for (Activity a : kActivities) {
    const Label x = activity_label(a);
    for (Choice b : kChoices) {
      EXPECT_EQ(p.successors(x, choice_label(b)),
                std::vector<Label>{activity_label(choose_next(a, b))});
      for (Command k : kCommands) {
        EXPECT_EQ(m.successors(x, pair_label(choice_label(b), command_label(k))),
                  std::vector<Label>{activity_label(controlled_next(a, b, k))});
      }
    }
    for (MaybeChoice b : kMaybeChoices) {
      for (Command k : kCommands) {
        EXPECT_EQ(s.successors(x, pair_label(choice_label(b), command_label(k))),
                  std::vector<Label>{activity_label(paced_next(a, b, k))});
      }
    }
    for (Command k : kCommands) {
      EXPECT_EQ(c.successors(command_label(k), x),
                std::vector<Label>{command_label(single_diner_command(a))});
    }
  }
  EXPECT_EQ(unconstrained_philosopher().transitions().size(), 6u);
  for (const auto* sys : {&p, &m, &s, &c}) EXPECT_TRUE(sys->deterministic());
}

TEST(ExtensionalTest, FeedbackCompositeFollowsPacedPrefix) {
  const SystemSpec c = single_diner_controller();
  const SystemSpec s = paced_philosopher();
  const SystemSpec t = compose(c, s, single_diner_feedback(c, s));
  EXPECT_EQ(t.initial(), std::set<Label>{"(p,t)"});
  // Inputs pair the controller's observed activity with the plant's
  // (choice, command); the interconnect pins both to the current outputs.
  const std::vector<Label> choices = {".", "1", ".", "0", "."};
  Label x = "(p,t)";
  std::vector<Label> seen{x};
  for (const auto& b : choices) {
    const auto [xc, xa] = split_pair_label(x);
    const Label u = pair_label(xa, pair_label(b, xc));
    const auto next = t.successors(x, u);
    ASSERT_EQ(next.size(), 1u) << x << " " << u;
    x = next.front();
    seen.push_back(x);
  }
  EXPECT_EQ(seen, (std::vector<Label>{"(p,t)", "(p,t)", "(p,h)", "(f1,h)",
                                      "(f1,e)", "(p,e)"}));
}

TEST(ExtensionalTest, InterconnectRejectsMismatchedWiring) {
  const SystemSpec c = single_diner_controller();
  const SystemSpec s = paced_philosopher();
  const Interconnect ic = single_diner_feedback(c, s);
  EXPECT_TRUE(ic.contains({"p", "t", "t", "(1,p)"}));
  EXPECT_FALSE(ic.contains({"p", "t", "h", "(1,p)"}));
  EXPECT_FALSE(ic.contains({"p", "t", "t", "(1,f1)"}));
}

}  // namespace
}  // namespace gdp
