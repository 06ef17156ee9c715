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

#ifndef GDP_EXECUTOR_H_
#define GDP_EXECUTOR_H_

// Lockstep execution of the hub/local controllers against paced philosophers,
// choice streams, trace checks and the starvation metrics.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdp/distributed.h"
#include "gdp/hub.h"

namespace gdp {

enum class Dynamics { clocked, polled };
enum class Architecture { centralized, distributed };
// Paced plants read a maybe-choice; the unpaced plant reads a choice every
// cycle and only makes sense in clocked dynamics.
enum class Plant { paced, unpaced };

struct TraceMode {
  Dynamics dynamics = Dynamics::polled;
  Architecture architecture = Architecture::centralized;

  bool operator==(const TraceMode&) const = default;
};

// "polled-centralized", "clocked-distributed", ...
std::string mode_string(TraceMode mode);
TraceMode parse_mode(const std::string& text);

class ChoiceStream {
 public:
  enum class Kind { scripted, seeded, bounded_eating };

  // One row per sample. In polled runs a sample is a step; in clocked runs a
  // scripted row is consumed every cycle, so pacing gaps must be explicit.
  static ChoiceStream Scripted(std::vector<MaybeChoiceMap> rows);
  // Each vertex switches with probability p_switch at every sample.
  static ChoiceStream Seeded(std::uint64_t seed, double p_switch = 0.5);
  // Eaters choose 0 until they have eaten max_eat consecutive samples, then
  // 1. Other vertices switch with probability p_switch.
  static ChoiceStream BoundedEating(std::uint64_t seed, int max_eat,
                                    double p_switch = 0.5);

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  int max_eat() const { return max_eat_; }
  double p_switch() const { return p_switch_; }
  const std::vector<MaybeChoiceMap>& script() const { return script_; }

  // `eating_streak` counts consecutive samples, including this one, at which
  // j was eating.
  MaybeChoice choice(Vertex j, std::int64_t sample, Activity current,
                     int eating_streak) const;

  // Remaining eating samples; bounded-eating only.
  int remaining_eat(int eating_streak) const;

 private:
  ChoiceStream() = default;

  Kind kind_ = Kind::seeded;
  std::uint64_t seed_ = 0;
  int max_eat_ = 1;
  double p_switch_ = 0.5;
  std::vector<MaybeChoiceMap> script_;
};

struct RunOptions {
  Dynamics dynamics = Dynamics::polled;
  Architecture architecture = Architecture::centralized;
  Plant plant = Plant::paced;
  // Number of records: cycles in clocked runs, steps in polled runs.
  std::int64_t horizon = 1;
  // Distributed runs only; ascending when absent.
  std::optional<NeighbourOrder> order;
  // Evaluate per-vertex updates of one step concurrently.
  bool parallel = false;
};

struct StepRecord {
  std::int64_t step = 0;
  ActivityMap activity;
  MaybeChoiceMap choice;
  CommandMap command;
  PriorityMap priority;
  // Distributed runs: dominance vectors indexed by neighbour order.
  std::optional<VertexMap<DominanceVector>> dominance;
  TraceMode mode;

  bool operator==(const StepRecord&) const = default;
};

struct Trace {
  std::vector<StepRecord> records;
  // Distributed runs: the neighbour order used.
  std::optional<NeighbourOrder> order;
  // Number of times a local controller saw itself and a neighbour both
  // eating. Unreachable in legal runs.
  std::uint64_t both_eating_updates = 0;
};

Trace run_clocked(const ConflictGraph& g, const RunOptions& options,
                  const ChoiceStream& stream);
Trace run_polled(const ConflictGraph& g, const RunOptions& options,
                 const ChoiceStream& stream);
// Dispatches on options.dynamics.
Trace run(const ConflictGraph& g, const RunOptions& options,
          const ChoiceStream& stream);

struct WaitMetric {
  int dominator_closure = 0;
  int top_wait = 0;

  auto operator<=>(const WaitMetric&) const = default;
};

struct MetricSnapshot {
  VertexMap<int> eat_remaining;
  VertexMap<int> top_wait;
  VertexMap<WaitMetric> hungry_wait;
};

// `eating_streak[j]` as for ChoiceStream::choice. Throws UnsupportedMode
// unless the stream is bounded-eating.
MetricSnapshot compute_metrics(const ConflictGraph& g, const StepRecord& record,
                               const ChoiceStream& stream,
                               const VertexMap<int>& eating_streak);

// Metrics for every record of a polled trace; streaks are read off the trace.
std::vector<MetricSnapshot> trace_metrics(const ConflictGraph& g,
                                          const std::vector<StepRecord>& records,
                                          const ChoiceStream& stream);

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::optional<std::int64_t> first_violation;
  std::string detail;
  std::uint64_t violations = 0;
};

struct InvariantReport {
  std::vector<InvariantResult> results;
  // Longest hungry interval seen, in records.
  std::int64_t max_hungry_wait = 0;
  // Vertices still hungry in the last record.
  int open_hungry_intervals = 0;

  bool clean() const;
  const InvariantResult* find(const std::string& name) const;
};

struct CheckOptions {
  // Enables metric, eating-bound and starvation checks.
  std::optional<int> max_eat;
  // Hungry intervals longer than this fail the starvation check. Defaults to
  // (n+1)(max_eat+2).
  std::optional<std::int64_t> starvation_bound;
  // Neighbour order behind recorded dominance vectors; ascending if absent.
  std::optional<NeighbourOrder> order;
};

// Checks a trace of a single mode. Polled traces get the full invariant set;
// clocked traces get well-formedness, safety and the clocked update laws.
InvariantReport check_invariants(const ConflictGraph& g,
                                 const std::vector<StepRecord>& records,
                                 const CheckOptions& options = {});

struct ComparisonResult {
  bool equal = true;
  std::optional<std::int64_t> first_difference;
  std::string detail;
};

// Per-step equality of activities, choices, commands and priority maps.
ComparisonResult compare_traces(const std::vector<StepRecord>& lhs,
                                const std::vector<StepRecord>& rhs);

// Polled record i against clocked record 2i+1.
ComparisonResult compare_sampled(const std::vector<StepRecord>& polled,
                                 const std::vector<StepRecord>& clocked);

struct TraceSummary {
  std::int64_t steps = 0;
  VertexMap<std::int64_t> eat_sessions;
  std::int64_t max_hungry_wait = 0;
};

TraceSummary summarize(const std::vector<StepRecord>& records);

}  // namespace gdp

#endif  // GDP_EXECUTOR_H_
