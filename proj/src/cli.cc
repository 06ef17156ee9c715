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

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdp/error.h"
#include "gdp/philosopher.h"
#include "gdp/trace.h"

namespace gdp {

namespace {

template <class T>
void RequireOneOf(const std::string& flag, const std::string& value,
                  std::initializer_list<T> allowed) {
  for (const auto& a : allowed) {
    if (value == a) return;
  }
  throw InvalidInput("bad value '" + value + "' for " + flag);
}

}  // namespace

void validate(const RunConfig& c) {
  RequireOneOf("--mode", c.mode, {"centralized", "distributed", "both"});
  RequireOneOf("--dynamics", c.dynamics, {"clocked", "polled"});
  RequireOneOf("--plant", c.plant, {"paced", "unpaced"});
  RequireOneOf("--stream", c.stream, {"scripted", "seeded", "bounded"});
  if (c.graph_path.empty()) throw InvalidInput("--graph is required");
  if (c.horizon < 1) throw InvalidInput("horizon must be at least 1");
  if (c.max_eat < 1) throw InvalidInput("max-eat must be at least 1");
  if (!(c.p_switch >= 0.0 && c.p_switch <= 1.0)) {
    throw InvalidInput("p-switch must lie in [0, 1]");
  }
  if (c.stream == "scripted" && c.script_path.empty()) {
    throw InvalidInput("a scripted stream needs --script");
  }
}

NeighbourOrder parse_order(const std::string& spec, const ConflictGraph& g) {
  if (spec == "ascending") return NeighbourOrder::Ascending(g);
  if (spec == "descending") return NeighbourOrder::Descending(g);
  const std::string prefix = "shuffled:";
  if (spec.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string seed = spec.substr(prefix.size());
      const auto value = std::stoull(seed, &used);
      if (used != seed.size()) throw std::invalid_argument(seed);
      return NeighbourOrder::Shuffled(g, value);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad shuffle seed in '" + spec + "'");
    }
  }
  std::istringstream in(read_file(spec));
  VertexMap<std::vector<Vertex>> lists(g.vertex_count(), {});
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = raw.find(':');
    std::istringstream head(raw.substr(0, colon));
    Vertex j = 0;
    if (colon == std::string::npos || !(head >> j) || j < 1 ||
        j > g.vertex_count() || seen[j - 1]) {
      throw InvalidInput(spec + " line " + std::to_string(line) +
                         ": expected \"j: k1 k2 ...\"");
    }
    seen[j - 1] = true;
    std::istringstream tail(raw.substr(colon + 1));
    for (Vertex k; tail >> k;) lists[j].push_back(k);
  }
  return NeighbourOrder::FromLists(g, std::move(lists));
}

ChoiceStream make_stream(const RunConfig& c, const ConflictGraph& g) {
  if (!c.script_path.empty()) {
    return ChoiceStream::Scripted(
        parse_script(read_file(c.script_path), g.vertex_count()));
  }
  if (c.stream == "seeded") return ChoiceStream::Seeded(c.seed, c.p_switch);
  if (c.stream == "bounded") {
    return ChoiceStream::BoundedEating(c.seed, c.max_eat, c.p_switch);
  }
  throw InvalidInput("a scripted stream needs --script");
}

namespace {

struct Session {
  RunConfig config;
  ConflictGraph graph{1, {}};
  std::optional<ChoiceStream> stream;
  NeighbourOrder order = NeighbourOrder::Ascending(graph);
};

Session Load(const RunConfig& config, std::ostream& err) {
  validate(config);
  Session s;
  s.config = config;
  s.graph = parse_graph(read_file(config.graph_path));
  for (const auto& w : s.graph.warnings()) err << "warning: " << w << '\n';
  s.stream = make_stream(config, s.graph);
  s.order = parse_order(config.order, s.graph);
  return s;
}

RunOptions Options(const Session& s, Architecture arch, Dynamics dynamics) {
  RunOptions o;
  o.dynamics = dynamics;
  o.architecture = arch;
  o.plant = s.config.plant == "unpaced" ? Plant::unpaced : Plant::paced;
  o.horizon = s.config.horizon;
  o.order = s.order;
  o.parallel = s.config.parallel;
  return o;
}

Dynamics ConfigDynamics(const RunConfig& c) {
  return c.dynamics == "clocked" ? Dynamics::clocked : Dynamics::polled;
}

std::vector<Architecture> ConfigArchitectures(const RunConfig& c) {
  if (c.mode == "both") {
    return {Architecture::centralized, Architecture::distributed};
  }
  return {c.mode == "distributed" ? Architecture::distributed
                                  : Architecture::centralized};
}

// Independent runs go to separate threads; each is deterministic.
std::vector<Trace> RunAll(const Session& s, const std::vector<RunOptions>& opts) {
  std::vector<std::future<Trace>> jobs;
  for (const auto& o : opts) {
    jobs.push_back(std::async(std::launch::async, [&s, o] {
      return run(s.graph, o, *s.stream);
    }));
  }
  std::vector<Trace> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

CheckOptions ChecksFor(const Session& s, const Trace& trace) {
  CheckOptions c;
  if (s.stream->kind() == ChoiceStream::Kind::bounded_eating) {
    c.max_eat = s.stream->max_eat();
  }
  c.order = trace.order;
  return c;
}

bool PrintReport(std::ostream& out, const std::string& mode,
                 const InvariantReport& report, bool verbose) {
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    if (!r.passed) ++failed;
    if (!verbose && r.passed) continue;
    out << (r.passed ? "pass " : "FAIL ") << r.name;
    if (!r.passed) {
      out << " at step " << *r.first_violation << ": " << r.detail << " ("
          << r.violations << " violations)";
    }
    out << '\n';
  }
  out << mode << ": " << report.results.size() - failed << '/'
      << report.results.size() << " invariants pass, max hungry wait "
      << report.max_hungry_wait << '\n';
  return failed == 0;
}

void PrintSummary(std::ostream& out, const Trace& trace) {
  const TraceSummary s = summarize(trace.records);
  out << mode_string(trace.records.front().mode) << ": " << s.steps
      << " steps; eat counts";
  for (Vertex j = 1; j <= s.eat_sessions.size(); ++j) {
    out << ' ' << j << ':' << s.eat_sessions[j];
  }
  out << "; max hungry wait " << s.max_hungry_wait << '\n';
}

bool PrintComparison(std::ostream& out, const std::string& what,
                     const ComparisonResult& r, std::size_t steps) {
  if (r.equal) {
    out << what << ": equal over " << steps << " steps\n";
  } else {
    out << what << ": differ at step " << *r.first_difference << ": "
        << r.detail << '\n';
  }
  return r.equal;
}

void WriteOutputs(const Session& s, const std::vector<Trace>& traces) {
  if (!s.config.out_path.empty()) {
    std::ofstream f(s.config.out_path);
    if (!f) throw InvalidInput("cannot write " + s.config.out_path);
    for (const auto& t : traces) write_trace(f, s.graph, t);
  }
  if (!s.config.csv_path.empty()) {
    std::ofstream f(s.config.csv_path);
    if (!f) throw InvalidInput("cannot write " + s.config.csv_path);
    std::vector<StepRecord> all;
    for (const auto& t : traces) {
      all.insert(all.end(), t.records.begin(), t.records.end());
    }
    write_csv(f, s.graph, all);
  }
}

int CmdRun(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Session s = Load(config, err);
  std::vector<RunOptions> opts;
  for (Architecture a : ConfigArchitectures(config)) {
    opts.push_back(Options(s, a, ConfigDynamics(config)));
  }
  const auto traces = RunAll(s, opts);
  WriteOutputs(s, traces);
  bool ok = true;
  for (const auto& t : traces) {
    PrintSummary(out, t);
    ok &= PrintReport(out, mode_string(t.records.front().mode),
                      check_invariants(s.graph, t.records, ChecksFor(s, t)),
                      false);
  }
  if (traces.size() == 2) {
    ok &= PrintComparison(out, "centralized vs distributed",
                          compare_traces(traces[0].records, traces[1].records),
                          traces[0].records.size());
  }
  return ok ? 0 : 1;
}

std::vector<TraceMode> ModesInOrder(const std::vector<StepRecord>& records) {
  std::vector<TraceMode> modes;
  for (const auto& r : records) {
    if (std::find(modes.begin(), modes.end(), r.mode) == modes.end()) {
      modes.push_back(r.mode);
    }
  }
  return modes;
}

int CmdCheckFile(const std::string& path, const RunConfig& config,
                 std::optional<int> max_eat, std::ostream& out,
                 std::ostream& err) {
  if (config.graph_path.empty()) throw InvalidInput("--graph is required");
  const ConflictGraph g = parse_graph(read_file(config.graph_path));
  for (const auto& w : g.warnings()) err << "warning: " << w << '\n';
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  const ParsedTrace parsed = read_trace(in, g);
  if (parsed.records.empty()) throw InvalidInput(path + " holds no records");

  bool ok = true;
  std::vector<std::vector<StepRecord>> groups;
  for (TraceMode m : ModesInOrder(parsed.records)) {
    groups.push_back(select_mode(parsed.records, m));
    CheckOptions opts;
    opts.max_eat = max_eat;
    if (m.architecture == Architecture::distributed) opts.order = parsed.order;
    ok &= PrintReport(out, mode_string(m),
                      check_invariants(g, groups.back(), opts), true);
  }
  if (groups.size() == 2) {
    const auto& a = groups[0];
    const auto& b = groups[1];
    const std::string what = mode_string(a.front().mode) + " vs " +
                             mode_string(b.front().mode);
    if (a.front().mode.dynamics == b.front().mode.dynamics) {
      ok &= PrintComparison(out, what, compare_traces(a, b), a.size());
    }
  }
  return ok ? 0 : 1;
}

int CmdCheck(const RunConfig& config, bool compare, std::ostream& out,
             std::ostream& err) {
  const Session s = Load(config, err);
  std::vector<RunOptions> opts;
  auto archs = ConfigArchitectures(config);
  if (compare) archs = {Architecture::centralized, Architecture::distributed};
  for (Architecture a : archs) {
    opts.push_back(Options(s, a, ConfigDynamics(config)));
  }
  const auto traces = RunAll(s, opts);
  bool ok = true;
  for (const auto& t : traces) {
    ok &= PrintReport(out, mode_string(t.records.front().mode),
                      check_invariants(s.graph, t.records, ChecksFor(s, t)),
                      true);
  }
  if (traces.size() == 2) {
    ok &= PrintComparison(out, "centralized vs distributed",
                          compare_traces(traces[0].records, traces[1].records),
                          traces[0].records.size());
  }
  return ok ? 0 : 1;
}

int CmdCompare(const RunConfig& config, bool sampled, std::ostream& out,
               std::ostream& err) {
  const Session s = Load(config, err);
  bool ok = true;
  if (!sampled) {
    const Dynamics d = ConfigDynamics(config);
    const auto traces =
        RunAll(s, {Options(s, Architecture::centralized, d),
                   Options(s, Architecture::distributed, d)});
    ok = PrintComparison(out, "centralized vs distributed",
                         compare_traces(traces[0].records, traces[1].records),
                         traces[0].records.size());
    return ok ? 0 : 1;
  }
  if (s.stream->kind() == ChoiceStream::Kind::scripted) {
    throw InvalidInput("sampling comparison needs a generated stream");
  }
  for (Architecture a : ConfigArchitectures(config)) {
    RunOptions polled = Options(s, a, Dynamics::polled);
    RunOptions clocked = Options(s, a, Dynamics::clocked);
    clocked.horizon = 2 * polled.horizon;
    const auto traces = RunAll(s, {polled, clocked});
    ok &= PrintComparison(
        out, mode_string({Dynamics::polled, a}) + " vs odd clocked cycles",
        compare_sampled(traces[0].records, traces[1].records),
        traces[0].records.size());
  }
  return ok ? 0 : 1;
}

SystemSpec NamedSystem(const std::string& name) {
  if (name == "Q") return unconstrained_philosopher();
  if (name == "P") return choice_philosopher();
  if (name == "M") return controlled_philosopher();
  if (name == "S") return paced_philosopher();
  if (name == "C") return single_diner_controller();
  if (name == "R" || name == "T") {
    const SystemSpec c = single_diner_controller();
    const SystemSpec a =
        name == "R" ? controlled_philosopher() : paced_philosopher();
    return compose(c, a, single_diner_feedback(c, a));
  }
  throw InvalidInput("unknown system '" + name + "' (expected Q P M S C R T)");
}

std::string TraceText(const OutputTrace& trace) {
  const bool compact = std::all_of(trace.begin(), trace.end(),
                                   [](const Label& l) { return l.size() == 1; });
  std::string out;
  for (const auto& l : trace) {
    if (!compact && !out.empty()) out += ' ';
    out += l;
  }
  return out;
}

int CmdBehaviours(const std::string& name, const std::string& against,
                  int horizon, std::ostream& out) {
  if (horizon < 1) throw InvalidInput("horizon must be at least 1");
  const SystemSpec sys = NamedSystem(name);
  if (against.empty()) {
    const auto traces = bounded_behaviours(sys, horizon);
    out << name << " horizon " << horizon << ": " << traces.size()
        << " traces\n";
    for (const auto& t : traces) out << TraceText(t) << '\n';
    return 0;
  }
  const SystemSpec other = NamedSystem(against);
  bool ok = true;
  for (int h = 1; h <= horizon; ++h) {
    const auto x = bounded_behaviours(sys, h);
    const auto y = bounded_behaviours(other, h);
    out << "horizon " << h << ": " << (x == y ? "equal" : "differ") << " ("
        << x.size() << " vs " << y.size() << " traces)\n";
    ok &= x == y;
  }
  return ok ? 0 : 1;
}

void AddRunFlags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--graph", c.graph_path, "Edge-list graph file");
  sub->add_option("--mode", c.mode, "centralized, distributed or both");
  sub->add_option("--dynamics", c.dynamics, "polled or clocked");
  sub->add_option("--plant", c.plant, "paced or unpaced (clocked only)");
  sub->add_option("--stream", c.stream, "bounded, seeded or scripted");
  sub->add_option("--seed", c.seed, "Stream seed");
  sub->add_option("--max-eat", c.max_eat, "Eating steps per session");
  sub->add_option("--p-switch", c.p_switch, "Switch probability");
  sub->add_option("--script", c.script_path, "Choice script file");
  sub->add_option("--horizon", c.horizon, "Records to produce");
  sub->add_option("--out", c.out_path, "NDJSON trace output");
  sub->add_option("--csv", c.csv_path, "CSV export");
  sub->add_option("--order", c.order,
                  "ascending, descending, shuffled:SEED or a file");
  sub->add_flag("--parallel", c.parallel, "Parallel per-vertex updates");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Dining philosophers as feedback control", "gdp"};
  app.require_subcommand(1);
  // Run settings live on the top level so that one config file serves every
  // subcommand; subcommands pass them through.
  app.fallthrough();
  app.set_config("--config", "", "INI/TOML file of run settings");

  RunConfig config;
  AddRunFlags(&app, config);
  auto* run_cmd = app.add_subcommand("run", "Run and write a trace");

  auto* check_cmd = app.add_subcommand("check", "Check invariants");
  std::string trace_path;
  bool compare = false;
  check_cmd->add_option("--trace", trace_path, "NDJSON trace to check");
  check_cmd->add_flag("--compare", compare,
                      "Also run both architectures and compare");

  auto* compare_cmd =
      app.add_subcommand("compare", "Compare architectures or dynamics");
  bool sampled = false;
  compare_cmd->add_flag("--sampled", sampled,
                        "Polled run against odd cycles of the clocked run");

  auto* beh_cmd =
      app.add_subcommand("behaviours", "Enumerate bounded output traces");
  std::string system = "Q", against;
  int beh_horizon = 3;
  beh_cmd->add_option("--system", system, "Q, P, M, S, C, R or T");
  beh_cmd->add_option("--against", against, "Compare trace sets up to horizon");
  beh_cmd->add_option("--horizon", beh_horizon, "Trace length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return CmdRun(config, out, err);
    if (check_cmd->parsed()) {
      if (!trace_path.empty()) {
        std::optional<int> max_eat;
        if (app.count("--max-eat") > 0) max_eat = config.max_eat;
        return CmdCheckFile(trace_path, config, max_eat, out, err);
      }
      return CmdCheck(config, compare, out, err);
    }
    if (compare_cmd->parsed()) return CmdCompare(config, sampled, out, err);
    if (beh_cmd->parsed()) {
      return CmdBehaviours(system, against, beh_horizon, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gdp
