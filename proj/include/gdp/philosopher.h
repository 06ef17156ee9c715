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

#ifndef GDP_PHILOSOPHER_H_
#define GDP_PHILOSOPHER_H_

// Philosopher alphabets, the transition functions of the philosopher
// family, and the single-diner controller.

#include <cstdint>
#include <optional>
#include <string>

#include "gdp/system.h"

namespace gdp {

enum class Activity : std::uint8_t { thinking, hungry, eating };

// The philosopher's own preference: stay in the current activity or move on.
enum class Choice : std::uint8_t { zero, one };

// Absent (std::nullopt) or present choice.
using MaybeChoice = std::optional<Choice>;

enum class Command : std::uint8_t { pass, force0, force1 };

inline constexpr Activity kActivities[] = {Activity::thinking, Activity::hungry,
                                           Activity::eating};
inline constexpr Choice kChoices[] = {Choice::zero, Choice::one};
inline constexpr Command kCommands[] = {Command::pass, Command::force0,
                                        Command::force1};
inline const MaybeChoice kMaybeChoices[] = {std::nullopt, Choice::zero,
                                            Choice::one};

constexpr Activity stay(Activity a) { return a; }

// Cyclic successor t -> h -> e -> t.
constexpr Activity switch_activity(Activity a) {
  switch (a) {
    case Activity::thinking: return Activity::hungry;
    case Activity::hungry: return Activity::eating;
    case Activity::eating: return Activity::thinking;
  }
  return a;
}

// Uncontrolled philosopher: 0 stays, 1 switches.
constexpr Activity choose_next(Activity a, Choice b) {
  return b == Choice::zero ? stay(a) : switch_activity(a);
}

// Philosopher with a control input; a forcing command overrides the choice.
constexpr Activity controlled_next(Activity a, Choice b, Command c) {
  switch (c) {
    case Command::pass: return choose_next(a, b);
    case Command::force0: return choose_next(a, Choice::zero);
    case Command::force1: return choose_next(a, Choice::one);
  }
  return a;
}

// Paced philosopher: an absent choice freezes the activity whatever the
// command says.
constexpr Activity paced_next(Activity a, MaybeChoice b, Command c) {
  return b.has_value() ? controlled_next(a, *b, c) : a;
}

// Control law of the single-diner controller: force a hungry philosopher to
// eat, otherwise defer to its choice.
constexpr Command single_diner_command(Activity a) {
  return a == Activity::hungry ? Command::force1 : Command::pass;
}

// Canonical text encodings. Activities t/h/e, choices 0/1 with '.' for
// absent, commands p/0/1 in traces (command_char) and p/f0/f1 as system
// labels (command_label).
char activity_char(Activity a);
char choice_char(MaybeChoice b);
char command_char(Command c);
Label activity_label(Activity a);
Label choice_label(MaybeChoice b);
Label command_label(Command c);

// Inverses; throw InvalidInput on unknown characters.
Activity parse_activity(char ch);
MaybeChoice parse_choice(char ch);
Command parse_command(char ch);

std::string activity_string(const std::vector<Activity>& acts);

// Extensional members of the philosopher family, all transparent with
// initial activity thinking.
SystemSpec unconstrained_philosopher();   // autonomous, nondeterministic
SystemSpec choice_philosopher();          // input: choice
SystemSpec controlled_philosopher();      // input: (choice, command)
SystemSpec paced_philosopher();           // input: (maybe choice, command)
SystemSpec single_diner_controller();     // states commands, input activity

// Interconnect wiring the controller to the controlled (resp. paced)
// philosopher: the philosopher's activity feeds the controller and the
// controller's command feeds the philosopher's control input.
Interconnect single_diner_feedback(const SystemSpec& controller,
                                   const SystemSpec& philosopher);

}  // namespace gdp

#endif  // GDP_PHILOSOPHER_H_
