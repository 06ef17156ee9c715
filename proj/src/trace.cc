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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "gdp/error.h"

namespace gdp {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string Strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void LineError(int line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

}  // namespace

ConflictGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<int> count;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = Strip(raw);
    if (s.empty()) continue;
    std::istringstream fields(s);
    std::string extra;
    if (!count) {
      std::string tag;
      int n = 0;
      if (!(fields >> tag >> n) || tag != "n" || (fields >> extra)) {
        LineError(line, "expected \"n <count>\"");
      }
      if (n < 1) LineError(line, "vertex count must be positive");
      count = n;
      continue;
    }
    Vertex j = 0, k = 0;
    if (!(fields >> j >> k) || (fields >> extra)) {
      LineError(line, "expected an edge \"j k\"");
    }
    if (j < 1 || j > *count || k < 1 || k > *count) {
      LineError(line, "vertex out of range 1.." + std::to_string(*count));
    }
    if (j == k) {
      LineError(line, "self-loop on vertex " + std::to_string(j) +
                          " violates irreflexivity");
    }
    edges.emplace_back(j, k);
  }
  if (!count) throw InvalidInput("graph text has no \"n <count>\" line");
  return ConflictGraph(*count, edges);
}

std::vector<MaybeChoiceMap> parse_script(const std::string& text, int width) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<MaybeChoiceMap> rows;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = Strip(raw);
    if (s.empty()) continue;
    if (static_cast<int>(s.size()) != width) {
      LineError(line, "expected " + std::to_string(width) + " choices");
    }
    try {
      rows.push_back(parse_choice_map(s));
    } catch (const InvalidInput& err) {
      LineError(line, err.what());
    }
  }
  return rows;
}

std::string record_json(const ConflictGraph& g, const StepRecord& rec,
                        const NeighbourOrder* order) {
  ordered_json j;
  j["step"] = rec.step;
  j["act"] = activity_string(rec.activity);
  j["choice"] = choice_string(rec.choice);
  j["cmd"] = command_string(rec.command);
  j["prio"] = rec.priority.to_strings(g);
  j["mode"] = mode_string(rec.mode);
  if (rec.dominance) {
    auto& dv = j["dvec"] = ordered_json::array();
    for (const auto& v : rec.dominance->values()) {
      dv.push_back(dominance_string(v));
    }
  }
  if (order) {
    auto& lists = j["order"] = ordered_json::array();
    for (Vertex v = 1; v <= order->vertex_count(); ++v) {
      lists.push_back(order->neighbours(v));
    }
  }
  return j.dump();
}

void write_trace(std::ostream& out, const ConflictGraph& g, const Trace& trace) {
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const NeighbourOrder* order =
        i == 0 && trace.order ? &*trace.order : nullptr;
    out << record_json(g, trace.records[i], order) << '\n';
  }
}

ParsedTrace read_trace(std::istream& in, const ConflictGraph& g) {
  ParsedTrace parsed;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (Strip(raw).empty()) continue;
    try {
      const auto j = ordered_json::parse(raw);
      StepRecord rec;
      rec.step = j.at("step").get<std::int64_t>();
      rec.activity = parse_activity_map(j.at("act").get<std::string>());
      rec.choice = parse_choice_map(j.at("choice").get<std::string>());
      rec.command = parse_command_map(j.at("cmd").get<std::string>());
      const auto items = j.at("prio").get<std::vector<std::string>>();
      rec.priority = PriorityMap::FromStrings(g, items);
      rec.mode = parse_mode(j.at("mode").get<std::string>());
      if (j.contains("dvec")) {
        std::vector<DominanceVector> vs;
        for (const auto& s : j["dvec"]) {
          vs.push_back(parse_dominance(s.get<std::string>()));
        }
        rec.dominance = VertexMap<DominanceVector>(std::move(vs));
      }
      if (j.contains("order")) {
        auto lists = j["order"].get<std::vector<std::vector<Vertex>>>();
        parsed.order = NeighbourOrder::FromLists(
            g, VertexMap<std::vector<Vertex>>(std::move(lists)));
      }
      parsed.records.push_back(std::move(rec));
    } catch (const nlohmann::json::exception& err) {
      LineError(line, err.what());
    } catch (const Error& err) {
      LineError(line, err.what());
    }
  }
  return parsed;
}

std::vector<StepRecord> select_mode(const std::vector<StepRecord>& records,
                                    TraceMode mode) {
  std::vector<StepRecord> out;
  for (const auto& r : records) {
    if (r.mode == mode) out.push_back(r);
  }
  return out;
}

void write_csv(std::ostream& out, const ConflictGraph& g,
               const std::vector<StepRecord>& records) {
  out << "step,mode,vertex,act,choice,cmd,subordinates\n";
  for (const auto& rec : records) {
    for (Vertex j = 1; j <= g.vertex_count(); ++j) {
      out << rec.step << ',' << mode_string(rec.mode) << ',' << j << ','
          << activity_char(rec.activity[j]) << ',' << choice_char(rec.choice[j])
          << ',' << command_char(rec.command[j]) << ',';
      const auto subs = subordinates(g, rec.priority, j);
      for (std::size_t m = 0; m < subs.size(); ++m) {
        out << (m ? " " : "") << subs[m];
      }
      out << '\n';
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace gdp
