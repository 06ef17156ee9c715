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

#include "gdp/system.h"

#include <deque>
#include <iterator>

#include "gdp/error.h"

namespace gdp {

namespace {

void Require(bool cond, const std::string& message) {
  if (!cond) throw InvalidInput(message);
}

std::set<Label> Union(const std::set<Label>& a, const std::set<Label>& b) {
  std::set<Label> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

SystemSpec::SystemSpec(std::set<Label> states, std::set<Label> initial,
                       std::set<Label> inputs, std::set<Transition> transitions,
                       std::set<Label> outputs,
                       std::map<Label, Label> output_map)
    : states_(std::move(states)),
      initial_(std::move(initial)),
      inputs_(std::move(inputs)),
      transitions_(std::move(transitions)),
      outputs_(std::move(outputs)),
      output_map_(std::move(output_map)) {
  for (const auto& x : initial_) {
    Require(states_.count(x) != 0, "initial state '" + x + "' is not a state");
  }
  for (const auto& t : transitions_) {
    Require(states_.count(t.from) != 0 && states_.count(t.to) != 0,
            "transition " + t.from + " -> " + t.to + " leaves the state space");
    Require(inputs_.count(t.input) != 0,
            "transition input '" + t.input + "' is not an input");
  }
  Require(output_map_.size() == states_.size(),
          "output map must be total on the states");
  for (const auto& [x, y] : output_map_) {
    Require(states_.count(x) != 0, "output map names unknown state '" + x + "'");
    Require(outputs_.count(y) != 0, "output '" + y + "' is not an output");
  }
}

SystemSpec SystemSpec::Transparent(std::set<Label> states,
                                   std::set<Label> initial,
                                   std::set<Label> inputs,
                                   std::set<Transition> transitions) {
  std::map<Label, Label> identity;
  for (const auto& x : states) identity.emplace(x, x);
  std::set<Label> outputs = states;
  return SystemSpec(std::move(states), std::move(initial), std::move(inputs),
                    std::move(transitions), std::move(outputs),
                    std::move(identity));
}

const Label& SystemSpec::output(const Label& state) const {
  auto it = output_map_.find(state);
  if (it == output_map_.end()) throw InvalidInput("unknown state '" + state + "'");
  return it->second;
}

std::vector<Label> SystemSpec::successors(const Label& state,
                                          const Label& input) const {
  std::vector<Label> out;
  for (auto it = transitions_.lower_bound(Transition{state, input, ""});
       it != transitions_.end() && it->from == state && it->input == input;
       ++it) {
    out.push_back(it->to);
  }
  return out;
}

std::vector<Transition> SystemSpec::transitions_from(const Label& state) const {
  std::vector<Transition> out;
  for (auto it = transitions_.lower_bound(Transition{state, "", ""});
       it != transitions_.end() && it->from == state; ++it) {
    out.push_back(*it);
  }
  return out;
}

bool SystemSpec::deterministic() const {
  const Transition* prev = nullptr;
  for (const auto& t : transitions_) {
    if (prev != nullptr && prev->from == t.from && prev->input == t.input) {
      return false;
    }
    prev = &t;
  }
  return true;
}

bool SystemSpec::transparent() const {
  if (outputs_ != states_) return false;
  for (const auto& [x, y] : output_map_) {
    if (x != y) return false;
  }
  return true;
}

Label pair_label(const Label& first, const Label& second) {
  return "(" + first + "," + second + ")";
}

std::pair<Label, Label> split_pair_label(const Label& label) {
  Require(label.size() >= 3 && label.front() == '(' && label.back() == ')',
          "'" + label + "' is not a pair label");
  int depth = 0;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    char ch = label[i];
    if (ch == '(') {
      ++depth;
    } else if (ch == ')') {
      --depth;
    } else if (ch == ',' && depth == 0) {
      return {label.substr(1, i - 1), label.substr(i + 1, label.size() - i - 2)};
    }
  }
  throw InvalidInput("'" + label + "' is not a pair label");
}

Interconnect Interconnect::Where(
    const SystemSpec& sys_c, const SystemSpec& sys_a,
    const std::function<bool(const InterconnectTuple&)>& admit) {
  std::set<InterconnectTuple> tuples;
  for (const auto& xc : sys_c.states()) {
    for (const auto& xa : sys_a.states()) {
      for (const auto& uc : sys_c.inputs()) {
        for (const auto& ua : sys_a.inputs()) {
          InterconnectTuple t{xc, xa, uc, ua};
          if (admit(t)) tuples.insert(std::move(t));
        }
      }
    }
  }
  return Interconnect(std::move(tuples));
}

Interconnect Interconnect::Full(const SystemSpec& sys_c,
                                const SystemSpec& sys_a) {
  return Where(sys_c, sys_a, [](const InterconnectTuple&) { return true; });
}

SystemSpec compose(const SystemSpec& sys_c, const SystemSpec& sys_a,
                   const Interconnect& ic) {
  for (const auto& t : ic.tuples()) {
    Require(sys_c.states().count(t.state_c) != 0,
            "interconnect names unknown controller state '" + t.state_c + "'");
    Require(sys_a.states().count(t.state_a) != 0,
            "interconnect names unknown plant state '" + t.state_a + "'");
    Require(sys_c.inputs().count(t.input_c) != 0,
            "interconnect names unknown controller input '" + t.input_c + "'");
    Require(sys_a.inputs().count(t.input_a) != 0,
            "interconnect names unknown plant input '" + t.input_a + "'");
  }

  std::set<std::pair<Label, Label>> admitted;
  for (const auto& t : ic.tuples()) admitted.emplace(t.state_c, t.state_a);

  std::set<Label> states;
  std::set<Label> initial;
  std::map<Label, Label> output_map;
  std::set<Label> outputs;
  for (const auto& [xc, xa] : admitted) {
    Label x = pair_label(xc, xa);
    states.insert(x);
    if (sys_c.initial().count(xc) != 0 && sys_a.initial().count(xa) != 0) {
      initial.insert(x);
    }
    output_map.emplace(x, pair_label(sys_c.output(xc), sys_a.output(xa)));
  }
  for (const auto& yc : sys_c.outputs()) {
    for (const auto& ya : sys_a.outputs()) outputs.insert(pair_label(yc, ya));
  }

  std::set<Label> inputs;
  for (const auto& uc : sys_c.inputs()) {
    for (const auto& ua : sys_a.inputs()) inputs.insert(pair_label(uc, ua));
  }

  std::set<Transition> transitions;
  for (const auto& t : ic.tuples()) {
    const auto next_c = sys_c.successors(t.state_c, t.input_c);
    if (next_c.empty()) continue;
    const auto next_a = sys_a.successors(t.state_a, t.input_a);
    for (const auto& xc2 : next_c) {
      for (const auto& xa2 : next_a) {
        if (admitted.count({xc2, xa2}) == 0) continue;
        transitions.insert(Transition{pair_label(t.state_c, t.state_a),
                                      pair_label(t.input_c, t.input_a),
                                      pair_label(xc2, xa2)});
      }
    }
  }

  return SystemSpec(std::move(states), std::move(initial), std::move(inputs),
                    std::move(transitions), std::move(outputs),
                    std::move(output_map));
}

SystemSpec hoare_compose(const SystemSpec& sys_c, const SystemSpec& sys_a) {
  Require(sys_c.transparent() && sys_a.transparent(),
          "shared-action composition needs transparent systems");
  const auto& uc = sys_c.inputs();
  const auto& ua = sys_a.inputs();

  std::set<Label> states;
  std::set<Label> initial;
  for (const auto& xc : sys_c.states()) {
    for (const auto& xa : sys_a.states()) {
      states.insert(pair_label(xc, xa));
      if (sys_c.initial().count(xc) != 0 && sys_a.initial().count(xa) != 0) {
        initial.insert(pair_label(xc, xa));
      }
    }
  }

  std::set<Transition> transitions;
  for (const auto& xc : sys_c.states()) {
    for (const auto& xa : sys_a.states()) {
      const Label from = pair_label(xc, xa);
      for (const auto& u : Union(uc, ua)) {
        const bool in_c = uc.count(u) != 0;
        const bool in_a = ua.count(u) != 0;
        if (in_c && in_a) {
          for (const auto& xc2 : sys_c.successors(xc, u)) {
            for (const auto& xa2 : sys_a.successors(xa, u)) {
              transitions.insert({from, u, pair_label(xc2, xa2)});
            }
          }
        } else if (in_c) {
          for (const auto& xc2 : sys_c.successors(xc, u)) {
            transitions.insert({from, u, pair_label(xc2, xa)});
          }
        } else {
          for (const auto& xa2 : sys_a.successors(xa, u)) {
            transitions.insert({from, u, pair_label(xc, xa2)});
          }
        }
      }
    }
  }
  return SystemSpec::Transparent(std::move(states), std::move(initial),
                                 Union(uc, ua), std::move(transitions));
}

SystemSpec lift_with_bottom(const SystemSpec& sys) {
  Require(sys.inputs().count(kBottom) == 0,
          "input alphabet already contains " + kBottom);
  std::set<Label> inputs = sys.inputs();
  inputs.insert(kBottom);
  std::set<Transition> transitions = sys.transitions();
  for (const auto& x : sys.states()) transitions.insert({x, kBottom, x});
  return SystemSpec(sys.states(), sys.initial(), std::move(inputs),
                    std::move(transitions), sys.outputs(), sys.output_map());
}

SystemSpec lift_and_compose(const SystemSpec& sys_c, const SystemSpec& sys_a) {
  Require(sys_c.transparent() && sys_a.transparent(),
          "shared-action composition needs transparent systems");
  const SystemSpec lifted_c = lift_with_bottom(sys_c);
  const SystemSpec lifted_a = lift_with_bottom(sys_a);
  const auto& uc = sys_c.inputs();
  const auto& ua = sys_a.inputs();
  const Interconnect shared = Interconnect::Where(
      lifted_c, lifted_a, [&](const InterconnectTuple& t) {
        const bool c_known = uc.count(t.input_c) != 0;
        const bool a_known = ua.count(t.input_a) != 0;
        if (t.input_c == t.input_a && a_known && c_known) return true;
        if (t.input_a == kBottom && c_known && ua.count(t.input_c) == 0) {
          return true;
        }
        return t.input_c == kBottom && a_known && uc.count(t.input_a) == 0;
      });
  return compose(lifted_c, lifted_a, shared);
}

SystemSpec unlift_inputs(const SystemSpec& lifted) {
  std::map<Label, Label> rename;
  for (const auto& u : lifted.inputs()) {
    auto [uc, ua] = split_pair_label(u);
    if (uc == kBottom && ua != kBottom) {
      rename.emplace(u, ua);
    } else if (ua == kBottom && uc != kBottom) {
      rename.emplace(u, uc);
    } else if (uc == ua && uc != kBottom) {
      rename.emplace(u, uc);
    }
  }
  std::set<Label> inputs;
  for (const auto& [from, to] : rename) inputs.insert(to);
  std::set<Transition> transitions;
  for (const auto& t : lifted.transitions()) {
    auto it = rename.find(t.input);
    Require(it != rename.end(),
            "transition on unliftable input '" + t.input + "'");
    transitions.insert({t.from, it->second, t.to});
  }
  return SystemSpec(lifted.states(), lifted.initial(), std::move(inputs),
                    std::move(transitions), lifted.outputs(),
                    lifted.output_map());
}

SystemSpec clock_extend(const SystemSpec& sys) {
  std::set<Label> inputs;
  for (const auto& u : sys.inputs()) {
    inputs.insert(pair_label(u, "0"));
    inputs.insert(pair_label(u, "1"));
  }
  std::set<Transition> transitions;
  for (const auto& t : sys.transitions()) {
    transitions.insert({t.from, pair_label(t.input, "1"), t.to});
  }
  return SystemSpec(sys.states(), sys.initial(), std::move(inputs),
                    std::move(transitions), sys.outputs(), sys.output_map());
}

ClockSpec::ClockSpec(std::int64_t period, std::int64_t now)
    : period_(period), now_(now) {
  Require(period >= 1, "clock period must be at least 1");
  Require(now >= 0, "clock time must be nonnegative");
}

ClockSpec ClockSpec::advance(std::int64_t interval) const {
  Require(interval > 0, "clock interval must be positive");
  return ClockSpec(period_, now_ + interval);
}

std::set<OutputTrace> bounded_behaviours(const SystemSpec& sys, int horizon,
                                         std::size_t cap) {
  Require(horizon >= 1, "horizon must be at least 1");
  if (sys.states().size() * std::max<std::size_t>(sys.inputs().size(), 1) >
      cap) {
    throw ResourceLimit("system too large to enumerate behaviours");
  }

  // Breadth-first over (state, trace); one layer per time step.
  std::set<std::pair<Label, OutputTrace>> layer;
  for (const auto& x : sys.initial()) layer.insert({x, OutputTrace{sys.output(x)}});
  std::size_t explored = layer.size();

  for (int depth = 1; depth < horizon; ++depth) {
    std::set<std::pair<Label, OutputTrace>> next;
    for (const auto& [x, trace] : layer) {
      for (const auto& t : sys.transitions_from(x)) {
        OutputTrace extended = trace;
        extended.push_back(sys.output(t.to));
        if (next.emplace(t.to, std::move(extended)).second) {
          if (++explored > cap) {
            throw ResourceLimit("behaviour enumeration exceeded " +
                                std::to_string(cap) + " nodes");
          }
        }
      }
    }
    layer = std::move(next);
  }

  std::set<OutputTrace> out;
  for (auto& [x, trace] : layer) out.insert(trace);
  return out;
}

std::vector<Label> simulate(const SystemSpec& sys, const Label& start,
                            const std::vector<Label>& inputs) {
  Require(sys.states().count(start) != 0, "unknown start state '" + start + "'");
  std::vector<Label> visited{start};
  Label x = start;
  for (const auto& u : inputs) {
    auto next = sys.successors(x, u);
    Require(next.size() <= 1, "nondeterministic step from '" + x + "'");
    if (!next.empty()) x = next.front();
    visited.push_back(x);
  }
  return visited;
}

}  // namespace gdp
