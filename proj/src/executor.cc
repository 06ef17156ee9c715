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

#include "gdp/executor.h"

#include <algorithm>
#include <execution>
#include <numeric>
#include <sstream>

#include "gdp/error.h"
#include "gdp/random.h"

namespace gdp {

std::string mode_string(TraceMode mode) {
  std::string out = mode.dynamics == Dynamics::clocked ? "clocked" : "polled";
  out += mode.architecture == Architecture::centralized ? "-centralized"
                                                        : "-distributed";
  return out;
}

TraceMode parse_mode(const std::string& text) {
  for (Dynamics d : {Dynamics::clocked, Dynamics::polled}) {
    for (Architecture a :
         {Architecture::centralized, Architecture::distributed}) {
      if (mode_string({d, a}) == text) return {d, a};
    }
  }
  throw InvalidInput("unknown trace mode '" + text + "'");
}

ChoiceStream ChoiceStream::Scripted(std::vector<MaybeChoiceMap> rows) {
  ChoiceStream s;
  s.kind_ = Kind::scripted;
  s.script_ = std::move(rows);
  return s;
}

namespace {

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("p_switch must lie in [0, 1]");
  }
}

}  // namespace

ChoiceStream ChoiceStream::Seeded(std::uint64_t seed, double p_switch) {
  CheckProbability(p_switch);
  ChoiceStream s;
  s.kind_ = Kind::seeded;
  s.seed_ = seed;
  s.p_switch_ = p_switch;
  return s;
}

ChoiceStream ChoiceStream::BoundedEating(std::uint64_t seed, int max_eat,
                                         double p_switch) {
  CheckProbability(p_switch);
  if (max_eat < 1) throw InvalidInput("max_eat must be at least 1");
  ChoiceStream s;
  s.kind_ = Kind::bounded_eating;
  s.seed_ = seed;
  s.max_eat_ = max_eat;
  s.p_switch_ = p_switch;
  return s;
}

MaybeChoice ChoiceStream::choice(Vertex j, std::int64_t sample,
                                 Activity current, int eating_streak) const {
  switch (kind_) {
    case Kind::scripted:
      if (sample < 0 || static_cast<std::size_t>(sample) >= script_.size()) {
        throw InvalidInput("choice script exhausted at sample " +
                           std::to_string(sample));
      }
      return script_[static_cast<std::size_t>(sample)][j];
    case Kind::bounded_eating:
      if (current == Activity::eating) {
        return eating_streak >= max_eat_ ? Choice::one : Choice::zero;
      }
      [[fallthrough]];
    case Kind::seeded:
      return keyed_bernoulli(seed_, static_cast<std::uint64_t>(j),
                             static_cast<std::uint64_t>(sample), p_switch_)
                 ? Choice::one
                 : Choice::zero;
  }
  return std::nullopt;
}

int ChoiceStream::remaining_eat(int eating_streak) const {
  if (kind_ != Kind::bounded_eating) {
    throw UnsupportedMode("eating countdown needs a bounded-eating stream");
  }
  return eating_streak > 0 ? max_eat_ - eating_streak + 1 : 0;
}

namespace {

// Either the hub or the family of local controllers, behind one interface.
class ControlLoop {
 public:
  ControlLoop(const ConflictGraph& g, const RunOptions& options)
      : g_(g),
        distributed_(options.architecture == Architecture::distributed),
        parallel_(options.parallel),
        hub_(initial_hub_state(g)),
        order_(options.order ? *options.order : NeighbourOrder::Ascending(g)) {
    if (order_.vertex_count() != g.vertex_count()) {
      throw InvalidInput("neighbour order does not match graph");
    }
    if (distributed_) {
      local_ = initial_local_states(g, order_);
      vertices_.resize(static_cast<std::size_t>(g.vertex_count()));
      std::iota(vertices_.begin(), vertices_.end(), 1);
      hits_.assign(vertices_.size(), 0);
    }
  }

  void step(const ActivityMap& a) {
    if (!distributed_) {
      hub_ = hub_step(g_, hub_, a);
      return;
    }
    auto update = [&](Vertex j) {
      const LocalActivityView view = local_view(order_, a, j);
      if (view[0] == Activity::eating) {
        hits_[j - 1] += static_cast<std::uint64_t>(
            std::count(view.begin() + 1, view.end(), Activity::eating));
      }
      local_[j] = local_step(local_[j], view);
    };
    // Each update reads only `a` and writes only its own slot.
    if (parallel_) {
      std::for_each(std::execution::par, vertices_.begin(), vertices_.end(),
                    update);
    } else {
      std::for_each(vertices_.begin(), vertices_.end(), update);
    }
  }

  CommandMap commands() const {
    if (!distributed_) return hub_.commands;
    CommandMap out(g_.vertex_count(), Command::pass);
    for (Vertex j = 1; j <= g_.vertex_count(); ++j) out[j] = local_[j].command;
    return out;
  }

  PriorityMap priority() const {
    return distributed_ ? gather_priority(g_, dominance(), order_)
                        : hub_.priority;
  }

  VertexMap<DominanceVector> dominance() const {
    VertexMap<DominanceVector> out(g_.vertex_count(), {});
    for (Vertex j = 1; j <= g_.vertex_count(); ++j) {
      out[j] = local_[j].dominance;
    }
    return out;
  }

  bool distributed() const { return distributed_; }
  const NeighbourOrder& order() const { return order_; }
  std::uint64_t both_eating_updates() const {
    return std::accumulate(hits_.begin(), hits_.end(), std::uint64_t{0});
  }

 private:
  const ConflictGraph& g_;
  bool distributed_;
  bool parallel_;
  HubState hub_;
  NeighbourOrder order_;
  VertexMap<LocalControllerState> local_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> hits_;
};

void ValidateRun(const ConflictGraph& g, const RunOptions& options,
                 const ChoiceStream& stream) {
  if (options.horizon < 1) throw InvalidInput("horizon must be at least 1");
  if (options.plant == Plant::unpaced && options.dynamics == Dynamics::polled) {
    throw UnsupportedMode("the unpaced plant is only defined for clocked runs");
  }
  if (stream.kind() == ChoiceStream::Kind::scripted) {
    const auto& rows = stream.script();
    if (static_cast<std::int64_t>(rows.size()) < options.horizon) {
      throw InvalidInput("choice script has " + std::to_string(rows.size()) +
                         " rows, horizon is " +
                         std::to_string(options.horizon));
    }
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (rows[t].size() != g.vertex_count()) {
        throw InvalidInput("choice script row " + std::to_string(t) +
                           " has wrong width");
      }
      if (options.plant == Plant::unpaced &&
          std::any_of(rows[t].values().begin(), rows[t].values().end(),
                      [](MaybeChoice b) { return !b.has_value(); })) {
        throw InvalidInput("the unpaced plant needs a choice every cycle");
      }
    }
  }
}

Trace Execute(const ConflictGraph& g, const RunOptions& options,
              const ChoiceStream& stream) {
  ValidateRun(g, options, stream);
  const int n = g.vertex_count();
  const TraceMode mode{options.dynamics, options.architecture};
  const bool clocked = options.dynamics == Dynamics::clocked;
  // Generated streams feed paced clocked runs on odd cycles only.
  const bool gapped = clocked && options.plant == Plant::paced &&
                      stream.kind() != ChoiceStream::Kind::scripted;

  ControlLoop loop(g, options);
  ActivityMap a(n, Activity::thinking);
  VertexMap<int> streak(n, 0);
  Trace trace;
  trace.records.reserve(static_cast<std::size_t>(options.horizon));

  for (std::int64_t t = 0; t < options.horizon; ++t) {
    MaybeChoiceMap b(n, std::nullopt);
    if (!gapped || t % 2 == 1) {
      const std::int64_t sample = gapped ? t / 2 : t;
      for (Vertex j = 1; j <= n; ++j) {
        streak[j] = a[j] == Activity::eating ? streak[j] + 1 : 0;
        b[j] = stream.choice(j, sample, a[j], streak[j]);
      }
    }
    StepRecord rec;
    rec.step = t;
    rec.activity = a;
    rec.choice = b;
    rec.command = loop.commands();
    rec.priority = loop.priority();
    if (loop.distributed()) rec.dominance = loop.dominance();
    rec.mode = mode;

    ActivityMap next(n, Activity::thinking);
    for (Vertex j = 1; j <= n; ++j) {
      next[j] = options.plant == Plant::paced
                    ? paced_next(a[j], b[j], rec.command[j])
                    : controlled_next(a[j], *b[j], rec.command[j]);
    }
    trace.records.push_back(std::move(rec));
    if (clocked) {
      loop.step(a);
      a = std::move(next);
    } else {
      a = std::move(next);
      loop.step(a);
    }
  }
  if (loop.distributed()) trace.order = loop.order();
  trace.both_eating_updates = loop.both_eating_updates();
  return trace;
}

}  // namespace

Trace run_clocked(const ConflictGraph& g, const RunOptions& options,
                  const ChoiceStream& stream) {
  RunOptions o = options;
  o.dynamics = Dynamics::clocked;
  return Execute(g, o, stream);
}

Trace run_polled(const ConflictGraph& g, const RunOptions& options,
                 const ChoiceStream& stream) {
  RunOptions o = options;
  o.dynamics = Dynamics::polled;
  return Execute(g, o, stream);
}

Trace run(const ConflictGraph& g, const RunOptions& options,
          const ChoiceStream& stream) {
  return Execute(g, options, stream);
}

namespace {

std::vector<Vertex> EatingNeighbours(const ConflictGraph& g,
                                     const ActivityMap& a, Vertex j) {
  std::vector<Vertex> out;
  for (Vertex k : g.neighbours(j)) {
    if (a[k] == Activity::eating) out.push_back(k);
  }
  return out;
}

bool Subset(const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Vertex> Sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

MetricSnapshot Metrics(const ConflictGraph& g, const StepRecord& rec,
                       const VertexMap<int>& eat_remaining) {
  const int n = g.vertex_count();
  MetricSnapshot m{eat_remaining, VertexMap<int>(n, 0),
                   VertexMap<WaitMetric>(n, WaitMetric{})};
  const auto& a = rec.activity;
  const auto& d = rec.priority;
  for (Vertex j = 1; j <= n; ++j) {
    if (a[j] != Activity::hungry || !is_top(g, d, j)) continue;
    for (Vertex k : subordinates(g, d, j)) {
      if (a[k] == Activity::eating) m.top_wait[j] += eat_remaining[k];
    }
  }
  for (Vertex j = 1; j <= n; ++j) {
    if (a[j] != Activity::hungry) continue;
    const auto closure = transitive_dominators(g, d, j);
    WaitMetric w{static_cast<int>(closure.size()), 0};
    for (Vertex k : closure) {
      if (is_top(g, d, k)) w.top_wait += m.top_wait[k];
    }
    m.hungry_wait[j] = w;
  }
  return m;
}

}  // namespace

MetricSnapshot compute_metrics(const ConflictGraph& g, const StepRecord& record,
                               const ChoiceStream& stream,
                               const VertexMap<int>& eating_streak) {
  const int n = g.vertex_count();
  if (stream.kind() != ChoiceStream::Kind::bounded_eating) {
    throw UnsupportedMode("metrics need a bounded-eating stream");
  }
  if (record.activity.size() != n || eating_streak.size() != n) {
    throw InvalidInput("record does not match graph");
  }
  VertexMap<int> remaining(n, 0);
  for (Vertex j = 1; j <= n; ++j) {
    if (record.activity[j] == Activity::eating) {
      remaining[j] = stream.remaining_eat(std::max(eating_streak[j], 1));
    }
  }
  return Metrics(g, record, remaining);
}

std::vector<MetricSnapshot> trace_metrics(const ConflictGraph& g,
                                          const std::vector<StepRecord>& records,
                                          const ChoiceStream& stream) {
  if (stream.kind() != ChoiceStream::Kind::bounded_eating) {
    throw UnsupportedMode("metrics need a bounded-eating stream");
  }
  std::vector<MetricSnapshot> out;
  out.reserve(records.size());
  VertexMap<int> streak(g.vertex_count(), 0);
  for (const auto& rec : records) {
    if (rec.mode.dynamics != Dynamics::polled) {
      throw UnsupportedMode("metrics are defined on polled traces");
    }
    for (Vertex j = 1; j <= g.vertex_count(); ++j) {
      streak[j] = rec.activity[j] == Activity::eating ? streak[j] + 1 : 0;
    }
    out.push_back(compute_metrics(g, rec, stream, streak));
  }
  return out;
}

bool InvariantReport::clean() const {
  return std::all_of(results.begin(), results.end(),
                     [](const InvariantResult& r) { return r.passed; });
}

const InvariantResult* InvariantReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

class Ledger {
 public:
  std::size_t declare(const std::string& name) {
    results_.push_back(InvariantResult{name, true, std::nullopt, "", 0});
    return results_.size() - 1;
  }

  void fail(std::size_t id, std::int64_t step, const std::string& detail) {
    auto& r = results_[id];
    if (r.passed) {
      r.passed = false;
      r.first_violation = step;
      r.detail = detail;
    }
    ++r.violations;
  }

  std::vector<InvariantResult> take() { return std::move(results_); }

 private:
  std::vector<InvariantResult> results_;
};

std::string VertexText(Vertex j) { return "vertex " + std::to_string(j); }

std::string EdgeText(Vertex j, Vertex k) {
  return "edge {" + std::to_string(j) + "," + std::to_string(k) + "}";
}

bool WellFormed(const ConflictGraph& g, const StepRecord& rec,
                std::int64_t index, TraceMode mode, std::string* why) {
  const int n = g.vertex_count();
  if (rec.step != index) {
    *why = "step index " + std::to_string(rec.step) + ", expected " +
           std::to_string(index);
  } else if (rec.activity.size() != n || rec.choice.size() != n ||
             rec.command.size() != n) {
    *why = "per-vertex fields do not cover the graph";
  } else if (rec.priority.size() != g.edge_count()) {
    *why = "priority map does not cover the edges";
  } else if (!(rec.mode == mode)) {
    *why = "mode changes within the trace";
  } else {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Vertex v = rec.priority.dominator(e);
      if (v != g.edges()[e].lo && v != g.edges()[e].hi) {
        *why = "priority names a vertex outside its edge";
        return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace

InvariantReport check_invariants(const ConflictGraph& g,
                                 const std::vector<StepRecord>& records,
                                 const CheckOptions& options) {
  if (records.empty()) throw InvalidInput("trace is empty");
  const int n = g.vertex_count();
  const TraceMode mode = records.front().mode;
  const bool polled = mode.dynamics == Dynamics::polled;
  const std::int64_t count = static_cast<std::int64_t>(records.size());

  Ledger ledger;
  const auto well_formed = ledger.declare("well-formed");
  const auto safety = ledger.declare("safety");
  const auto transition = ledger.declare("activity-transition");
  const auto prio_update = ledger.declare("priority-update");
  const auto command_law = ledger.declare("command-law");
  std::size_t sinks = 0, hungry_thinkers = 0, acyclic = 0, dominated_waits = 0,
              sub_mono = 0, dom_anti = 0, top_cont = 0, no_new_eat = 0,
              trans_dom = 0, neighbour_eating = 0, hungry_forced = 0,
              dominance = 0;
  if (polled) {
    sinks = ledger.declare("eaters-are-sinks");
    hungry_thinkers = ledger.declare("hungry-dominate-thinkers");
    acyclic = ledger.declare("acyclicity");
    dominated_waits = ledger.declare("dominated-hungry-waits");
    sub_mono = ledger.declare("subordinate-monotonicity");
    dom_anti = ledger.declare("dominator-anti-monotonicity");
    top_cont = ledger.declare("top-continues");
    no_new_eat = ledger.declare("no-new-eating-neighbours");
    trans_dom = ledger.declare("transitive-dominator");
    neighbour_eating = ledger.declare("hungry-if-neighbour-eating");
    hungry_forced = ledger.declare("hungry-forced");
  }
  const bool has_dominance = records.front().dominance.has_value();
  if (has_dominance) dominance = ledger.declare("dominance-consistency");
  const bool metrics = polled && options.max_eat.has_value();
  std::size_t eat_bound = 0, w_eat = 0, w_top = 0, w_hungry = 0, starve = 0;
  if (metrics) {
    eat_bound = ledger.declare("max-eat-bound");
    w_eat = ledger.declare("metric-eat-decreases");
    w_top = ledger.declare("metric-top-decreases");
    w_hungry = ledger.declare("metric-hungry-decreases");
    starve = ledger.declare("starvation-freedom");
  }

  // Stop at the first malformed record: later checks index blindly.
  std::int64_t usable = count;
  for (std::int64_t i = 0; i < count; ++i) {
    std::string why;
    if (!WellFormed(g, records[static_cast<std::size_t>(i)], i, mode, &why)) {
      ledger.fail(well_formed, i, why);
      usable = i;
      break;
    }
  }

  const NeighbourOrder order =
      options.order ? *options.order : NeighbourOrder::Ascending(g);
  std::optional<ChoiceStream> countdown;
  if (metrics) countdown = ChoiceStream::BoundedEating(0, *options.max_eat);
  const std::int64_t bound =
      options.starvation_bound
          ? *options.starvation_bound
          : static_cast<std::int64_t>(n + 1) * (options.max_eat.value_or(1) + 2);

  VertexMap<int> streak(n, 0);
  VertexMap<std::int64_t> hungry_since(n, -1);
  std::int64_t max_wait = 0;
  std::optional<MetricSnapshot> prev_metrics;

  for (std::int64_t i = 0; i < usable; ++i) {
    const StepRecord& rec = records[static_cast<std::size_t>(i)];
    const auto& a = rec.activity;
    const auto& d = rec.priority;

    for (const Edge& e : g.edges()) {
      if (a[e.lo] == Activity::eating && a[e.hi] == Activity::eating) {
        ledger.fail(safety, i, "both ends of " + EdgeText(e.lo, e.hi) + " eat");
      }
    }

    for (Vertex j = 1; j <= n; ++j) {
      if (a[j] == Activity::hungry) {
        if (hungry_since[j] < 0) hungry_since[j] = i;
        max_wait = std::max(max_wait, i - hungry_since[j] + 1);
      } else {
        hungry_since[j] = -1;
      }
      streak[j] = a[j] == Activity::eating ? streak[j] + 1 : 0;
    }

    if (has_dominance) {
      std::string why;
      if (!rec.dominance) {
        why = "dominance vectors missing";
      } else {
        try {
          if (!(gather_priority(g, *rec.dominance, order) == d)) {
            why = "gathered dominance vectors differ from priority map";
          }
        } catch (const Error& err) {
          why = err.what();
        }
      }
      if (!why.empty()) ledger.fail(dominance, i, why);
    }

    if (polled) {
      for (Vertex j = 1; j <= n; ++j) {
        for (Vertex k : g.neighbours(j)) {
          if (a[k] == Activity::eating && !d.dominates(g, j, k)) {
            ledger.fail(sinks, i, "eater " + std::to_string(k) +
                                      " dominates " + std::to_string(j));
          }
          if (a[j] == Activity::hungry && a[k] == Activity::thinking &&
              !d.dominates(g, j, k)) {
            ledger.fail(hungry_thinkers, i,
                        "thinker " + std::to_string(k) + " dominates hungry " +
                            std::to_string(j));
          }
        }
        if (a[j] == Activity::hungry && rec.command[j] == Command::pass) {
          ledger.fail(hungry_forced, i, VertexText(j) + " hungry but passed");
        }
      }
      if (!is_acyclic(g, d)) ledger.fail(acyclic, i, "priority map has a cycle");
      if (!(rec.command == hub_commands(g, d, a))) {
        ledger.fail(command_law, i, "commands differ from the hub law");
      }
    } else if (i == 0) {
      if (!(rec.command == CommandMap(n, Command::pass))) {
        ledger.fail(command_law, i, "initial commands are not all pass");
      }
    }

    if (metrics) {
      VertexMap<int> remaining(n, 0);
      for (Vertex j = 1; j <= n; ++j) {
        if (streak[j] > *options.max_eat) {
          ledger.fail(eat_bound, i, VertexText(j) + " ate " +
                                        std::to_string(streak[j]) + " steps");
        }
        if (a[j] == Activity::eating) {
          remaining[j] = std::max(countdown->remaining_eat(streak[j]), 0);
        }
      }
      MetricSnapshot now = Metrics(g, rec, remaining);
      if (prev_metrics) {
        const StepRecord& before = records[static_cast<std::size_t>(i - 1)];
        for (Vertex j = 1; j <= n; ++j) {
          const Activity was = before.activity[j];
          if (was != a[j]) continue;
          if (was == Activity::eating &&
              !(now.eat_remaining[j] < prev_metrics->eat_remaining[j])) {
            ledger.fail(w_eat, i, VertexText(j));
          }
          if (was == Activity::hungry) {
            if (is_top(g, before.priority, j)) {
              if (!(now.top_wait[j] < prev_metrics->top_wait[j])) {
                ledger.fail(w_top, i, VertexText(j));
              }
            } else if (!(now.hungry_wait[j] < prev_metrics->hungry_wait[j])) {
              ledger.fail(w_hungry, i, VertexText(j));
            }
          }
        }
      }
      prev_metrics = std::move(now);
    }

    if (i + 1 >= usable) break;
    const StepRecord& nxt = records[static_cast<std::size_t>(i + 1)];
    const auto& a2 = nxt.activity;
    const auto& d2 = nxt.priority;

    for (Vertex j = 1; j <= n; ++j) {
      if (a2[j] != paced_next(a[j], rec.choice[j], rec.command[j])) {
        ledger.fail(transition, i + 1, VertexText(j));
      }
    }
    if (!polled) {
      if (!(d2 == update_priority(g, d, a))) {
        ledger.fail(prio_update, i + 1, "priority differs from update law");
      }
      if (!(nxt.command == hub_commands(g, d2, a))) {
        ledger.fail(command_law, i + 1, "commands differ from the hub law");
      }
      continue;
    }

    if (!(d2 == update_priority(g, d, a2))) {
      ledger.fail(prio_update, i + 1, "priority differs from update law");
    }
    for (Vertex j = 1; j <= n; ++j) {
      const bool stays_hungry =
          a[j] == Activity::hungry && a2[j] == Activity::hungry;
      for (Vertex k : g.neighbours(j)) {
        if (d.dominates(g, j, k) && a[k] == Activity::hungry &&
            a2[k] != Activity::hungry) {
          ledger.fail(dominated_waits, i + 1,
                      "dominated hungry " + std::to_string(k) + " moved");
        }
      }
      if (a[j] == Activity::hungry && a2[j] != Activity::hungry &&
          !EatingNeighbours(g, a, j).empty()) {
        ledger.fail(neighbour_eating, i + 1, VertexText(j));
      }
      if (!stays_hungry) continue;
      if (!Subset(subordinates(g, d, j), subordinates(g, d2, j))) {
        ledger.fail(sub_mono, i + 1, VertexText(j));
      }
      if (!Subset(dominators(g, d2, j), dominators(g, d, j))) {
        ledger.fail(dom_anti, i + 1, VertexText(j));
      }
      if (is_top(g, d, j)) {
        if (!is_top(g, d2, j)) ledger.fail(top_cont, i + 1, VertexText(j));
        if (!Subset(EatingNeighbours(g, a2, j), EatingNeighbours(g, a, j))) {
          ledger.fail(no_new_eat, i + 1, VertexText(j));
        }
      }
      if (!Subset(Sorted(transitive_dominators(g, d2, j)),
                  Sorted(transitive_dominators(g, d, j)))) {
        ledger.fail(trans_dom, i + 1, VertexText(j));
      }
    }
  }

  if (metrics) {
    // Hungry intervals, closed or still open at the end of the trace.
    VertexMap<std::int64_t> since(n, -1);
    for (std::int64_t i = 0; i < usable; ++i) {
      const auto& a = records[static_cast<std::size_t>(i)].activity;
      for (Vertex j = 1; j <= n; ++j) {
        if (a[j] != Activity::hungry) {
          since[j] = -1;
          continue;
        }
        if (since[j] < 0) since[j] = i;
        if (i - since[j] + 1 == bound + 1) {
          ledger.fail(starve, since[j],
                      VertexText(j) + " hungry for more than " +
                          std::to_string(bound) + " steps");
        }
      }
    }
  }

  InvariantReport report;
  report.results = ledger.take();
  report.max_hungry_wait = max_wait;
  for (Vertex j = 1; j <= n; ++j) {
    if (hungry_since[j] >= 0) ++report.open_hungry_intervals;
  }
  return report;
}

namespace {

std::string FieldDifference(const StepRecord& x, const StepRecord& y) {
  if (!(x.activity == y.activity)) return "activities differ";
  if (!(x.choice == y.choice)) return "choices differ";
  if (!(x.command == y.command)) return "commands differ";
  if (!(x.priority == y.priority)) return "priority maps differ";
  if (x.dominance && y.dominance && !(*x.dominance == *y.dominance)) {
    return "dominance vectors differ";
  }
  return "";
}

}  // namespace

ComparisonResult compare_traces(const std::vector<StepRecord>& lhs,
                                const std::vector<StepRecord>& rhs) {
  const std::size_t common = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < common; ++i) {
    std::string diff = FieldDifference(lhs[i], rhs[i]);
    if (!diff.empty()) {
      return {false, static_cast<std::int64_t>(i), diff};
    }
  }
  if (lhs.size() != rhs.size()) {
    return {false, static_cast<std::int64_t>(common), "trace lengths differ"};
  }
  return {};
}

ComparisonResult compare_sampled(const std::vector<StepRecord>& polled,
                                 const std::vector<StepRecord>& clocked) {
  for (std::size_t i = 0; i < polled.size(); ++i) {
    const std::size_t c = 2 * i + 1;
    if (c >= clocked.size()) {
      return {false, static_cast<std::int64_t>(i), "clocked trace too short"};
    }
    std::string diff = FieldDifference(polled[i], clocked[c]);
    if (!diff.empty()) return {false, static_cast<std::int64_t>(i), diff};
  }
  return {};
}

TraceSummary summarize(const std::vector<StepRecord>& records) {
  TraceSummary s;
  s.steps = static_cast<std::int64_t>(records.size());
  if (records.empty()) return s;
  const int n = records.front().activity.size();
  s.eat_sessions = VertexMap<std::int64_t>(n, 0);
  VertexMap<std::int64_t> run(n, 0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& a = records[i].activity;
    for (Vertex j = 1; j <= n; ++j) {
      if (a[j] == Activity::eating &&
          (i == 0 || records[i - 1].activity[j] != Activity::eating)) {
        ++s.eat_sessions[j];
      }
      run[j] = a[j] == Activity::hungry ? run[j] + 1 : 0;
      s.max_hungry_wait = std::max(s.max_hungry_wait, run[j]);
    }
  }
  return s;
}

}  // namespace gdp
