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

#include "gdp/error.h"

namespace gdp {

char activity_char(Activity a) {
  switch (a) {
    case Activity::thinking: return 't';
    case Activity::hungry: return 'h';
    case Activity::eating: return 'e';
  }
  return '?';
}

char choice_char(MaybeChoice b) {
  if (!b) return '.';
  return *b == Choice::zero ? '0' : '1';
}

char command_char(Command c) {
  switch (c) {
    case Command::pass: return 'p';
    case Command::force0: return '0';
    case Command::force1: return '1';
  }
  return '?';
}

Label activity_label(Activity a) { return Label(1, activity_char(a)); }
Label choice_label(MaybeChoice b) { return Label(1, choice_char(b)); }

Label command_label(Command c) {
  switch (c) {
    case Command::pass: return "p";
    case Command::force0: return "f0";
    case Command::force1: return "f1";
  }
  return "?";
}

Activity parse_activity(char ch) {
  switch (ch) {
    case 't': return Activity::thinking;
    case 'h': return Activity::hungry;
    case 'e': return Activity::eating;
  }
  throw InvalidInput(std::string("unknown activity '") + ch + "'");
}

MaybeChoice parse_choice(char ch) {
  switch (ch) {
    case '.': return std::nullopt;
    case '0': return Choice::zero;
    case '1': return Choice::one;
  }
  throw InvalidInput(std::string("unknown choice '") + ch + "'");
}

Command parse_command(char ch) {
  switch (ch) {
    case 'p': return Command::pass;
    case '0': return Command::force0;
    case '1': return Command::force1;
  }
  throw InvalidInput(std::string("unknown command '") + ch + "'");
}

std::string activity_string(const std::vector<Activity>& acts) {
  std::string out;
  out.reserve(acts.size());
  for (Activity a : acts) out.push_back(activity_char(a));
  return out;
}

namespace {

std::set<Label> ActivityLabels() {
  std::set<Label> out;
  for (Activity a : kActivities) out.insert(activity_label(a));
  return out;
}

const std::set<Label> kThinkingOnly = {activity_label(Activity::thinking)};

}  // namespace

SystemSpec unconstrained_philosopher() {
  std::set<Transition> transitions;
  for (Activity a : kActivities) {
    transitions.insert({activity_label(a), "*", activity_label(stay(a))});
    transitions.insert({activity_label(a), "*", activity_label(switch_activity(a))});
  }
  return SystemSpec::Transparent(ActivityLabels(), kThinkingOnly, {"*"},
                                 std::move(transitions));
}

SystemSpec choice_philosopher() {
  std::set<Label> inputs;
  std::set<Transition> transitions;
  for (Choice b : kChoices) {
    inputs.insert(choice_label(b));
    for (Activity a : kActivities) {
      transitions.insert({activity_label(a), choice_label(b),
                          activity_label(choose_next(a, b))});
    }
  }
  return SystemSpec::Transparent(ActivityLabels(), kThinkingOnly,
                                 std::move(inputs), std::move(transitions));
}

SystemSpec controlled_philosopher() {
  std::set<Label> inputs;
  std::set<Transition> transitions;
  for (Choice b : kChoices) {
    for (Command c : kCommands) {
      const Label u = pair_label(choice_label(b), command_label(c));
      inputs.insert(u);
      for (Activity a : kActivities) {
        transitions.insert(
            {activity_label(a), u, activity_label(controlled_next(a, b, c))});
      }
    }
  }
  return SystemSpec::Transparent(ActivityLabels(), kThinkingOnly,
                                 std::move(inputs), std::move(transitions));
}

SystemSpec paced_philosopher() {
  std::set<Label> inputs;
  std::set<Transition> transitions;
  for (const MaybeChoice& b : kMaybeChoices) {
    for (Command c : kCommands) {
      const Label u = pair_label(choice_label(b), command_label(c));
      inputs.insert(u);
      for (Activity a : kActivities) {
        transitions.insert(
            {activity_label(a), u, activity_label(paced_next(a, b, c))});
      }
    }
  }
  return SystemSpec::Transparent(ActivityLabels(), kThinkingOnly,
                                 std::move(inputs), std::move(transitions));
}

SystemSpec single_diner_controller() {
  std::set<Label> states;
  for (Command c : kCommands) states.insert(command_label(c));
  std::set<Transition> transitions;
  for (Command c : kCommands) {
    for (Activity a : kActivities) {
      transitions.insert({command_label(c), activity_label(a),
                          command_label(single_diner_command(a))});
    }
  }
  return SystemSpec::Transparent(std::move(states),
                                 {command_label(Command::pass)}, ActivityLabels(),
                                 std::move(transitions));
}

Interconnect single_diner_feedback(const SystemSpec& controller,
                                   const SystemSpec& philosopher) {
  return Interconnect::Where(
      controller, philosopher, [&](const InterconnectTuple& t) {
        const auto [choice, command] = split_pair_label(t.input_a);
        return philosopher.output(t.state_a) == t.input_c &&
               controller.output(t.state_c) == command;
      });
}

}  // namespace gdp
