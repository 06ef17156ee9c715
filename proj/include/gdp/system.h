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

#ifndef GDP_SYSTEM_H_
#define GDP_SYSTEM_H_

// Finite transition systems with output, represented extensionally.
//
// A system is the six-field record (states, initial states, inputs,
// transition relation, outputs, output map). Composite systems label their
// states and inputs with pair labels "(x,y)" built by pair_label(); atomic
// labels are expected not to contain ',' '(' or ')' so that pair labels can
// be split again unambiguously.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gdp {

using Label = std::string;

struct Transition {
  Label from;
  Label input;
  Label to;

  auto operator<=>(const Transition&) const = default;
};

class SystemSpec {
 public:
  // Throws InvalidInput when the fields are inconsistent: initial states or
  // transition endpoints outside `states`, transition inputs outside
  // `inputs`, or an output map that is not a total function into `outputs`.
  SystemSpec(std::set<Label> states, std::set<Label> initial,
             std::set<Label> inputs, std::set<Transition> transitions,
             std::set<Label> outputs, std::map<Label, Label> output_map);

  // White-box system: outputs are the states and the output map is identity.
  static SystemSpec Transparent(std::set<Label> states, std::set<Label> initial,
                                std::set<Label> inputs,
                                std::set<Transition> transitions);

  const std::set<Label>& states() const { return states_; }
  const std::set<Label>& initial() const { return initial_; }
  const std::set<Label>& inputs() const { return inputs_; }
  const std::set<Transition>& transitions() const { return transitions_; }
  const std::set<Label>& outputs() const { return outputs_; }
  const std::map<Label, Label>& output_map() const { return output_map_; }

  const Label& output(const Label& state) const;

  // Successor states of `state` under `input`, in label order.
  std::vector<Label> successors(const Label& state, const Label& input) const;

  // Every transition leaving `state`, in (input, target) order.
  std::vector<Transition> transitions_from(const Label& state) const;

  // At most one successor for every (state, input).
  bool deterministic() const;

  bool transparent() const;

  bool operator==(const SystemSpec&) const = default;

 private:
  std::set<Label> states_;
  std::set<Label> initial_;
  std::set<Label> inputs_;
  std::set<Transition> transitions_;
  std::set<Label> outputs_;
  std::map<Label, Label> output_map_;
};

Label pair_label(const Label& first, const Label& second);

// Inverse of pair_label. Throws InvalidInput if `label` is not a pair label.
std::pair<Label, Label> split_pair_label(const Label& label);

struct InterconnectTuple {
  Label state_c;
  Label state_a;
  Label input_c;
  Label input_a;

  auto operator<=>(const InterconnectTuple&) const = default;
};

// Relation over (state_c, state_a, input_c, input_a) of two systems.
class Interconnect {
 public:
  Interconnect() = default;
  explicit Interconnect(std::set<InterconnectTuple> tuples)
      : tuples_(std::move(tuples)) {}

  // Every tuple of X_c x X_a x U_c x U_a accepted by `admit`.
  static Interconnect Where(
      const SystemSpec& sys_c, const SystemSpec& sys_a,
      const std::function<bool(const InterconnectTuple&)>& admit);

  // The full product X_c x X_a x U_c x U_a.
  static Interconnect Full(const SystemSpec& sys_c, const SystemSpec& sys_a);

  const std::set<InterconnectTuple>& tuples() const { return tuples_; }
  bool contains(const InterconnectTuple& t) const { return tuples_.count(t) != 0; }

 private:
  std::set<InterconnectTuple> tuples_;
};

// Product of `sys_c` and `sys_a` restricted by `ic`. States are the pairs
// admitted by some tuple of `ic`; a transition fires when both components
// fire and the (state, input) tuple lies in `ic`. Transitions whose target
// pair is not itself admitted are dropped so the result stays well formed.
// Throws InvalidInput if a tuple names a state or input the systems lack.
SystemSpec compose(const SystemSpec& sys_c, const SystemSpec& sys_a,
                   const Interconnect& ic);

// Synchronous (shared-action) composition of two transparent systems.
// Shared inputs advance both sides; private inputs advance their owner only.
SystemSpec hoare_compose(const SystemSpec& sys_c, const SystemSpec& sys_a);

// Label of the absent input used when lifting input alphabets.
inline const Label kBottom = "_|_";

// Adds the absent input with a self-loop on every state.
SystemSpec lift_with_bottom(const SystemSpec& sys);

// Shared-action composition expressed as a composition of lifted systems
// over the interconnect that pairs each input with itself, or with the
// absent input on the side that does not know it. Input labels of the result
// are pairs (u_c, u_a).
SystemSpec lift_and_compose(const SystemSpec& sys_c, const SystemSpec& sys_a);

// Relabels the pair inputs of a lift_and_compose result back to single
// inputs: (u, _|_) -> u, (_|_, u) -> u, (u, u) -> u. Pair inputs of any other
// shape carry no transitions and are dropped.
SystemSpec unlift_inputs(const SystemSpec& lifted);

// Interface extension for clock synchronisation: inputs become (u, b) with
// b in {"0", "1"} and a transition fires only when the underlying one fires
// and b is "1".
SystemSpec clock_extend(const SystemSpec& sys);

// Clock with integer period, ticking when `now` is a multiple of `period`.
class ClockSpec {
 public:
  // Throws InvalidInput unless period >= 1 and now >= 0.
  explicit ClockSpec(std::int64_t period, std::int64_t now = 0);

  std::int64_t period() const { return period_; }
  std::int64_t now() const { return now_; }
  int output() const { return now_ % period_ == 0 ? 1 : 0; }

  // Elapses `interval` > 0 base units.
  ClockSpec advance(std::int64_t interval) const;

 private:
  std::int64_t period_;
  std::int64_t now_;
};

inline constexpr std::size_t kDefaultExplorationCap = 1'000'000;

using OutputTrace = std::vector<Label>;

// Every output trace of length `horizon` produced from an initial state under
// some input sequence. Throws InvalidInput for horizon < 1 and ResourceLimit
// when |states|*|inputs| or the number of explored nodes exceeds `cap`.
std::set<OutputTrace> bounded_behaviours(const SystemSpec& sys, int horizon,
                                         std::size_t cap = kDefaultExplorationCap);

// Drives a deterministic system from `start` through `inputs`, returning the
// visited states (inputs.size() + 1 entries). A missing successor leaves the
// state unchanged; more than one successor throws InvalidInput.
std::vector<Label> simulate(const SystemSpec& sys, const Label& start,
                            const std::vector<Label>& inputs);

}  // namespace gdp

#endif  // GDP_SYSTEM_H_
