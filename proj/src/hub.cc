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

#include "gdp/hub.h"

#include <algorithm>
#include <deque>

#include "gdp/error.h"

namespace gdp {

namespace {

void CheckDomain(const ConflictGraph& g, const PriorityMap& d) {
  if (d.size() != g.edge_count()) {
    throw InvalidInput("priority map covers " + std::to_string(d.size()) +
                       " edges, graph has " + std::to_string(g.edge_count()));
  }
}

void CheckDomain(const ConflictGraph& g, const ActivityMap& a) {
  if (a.size() != g.vertex_count()) {
    throw InvalidInput("activity map covers " + std::to_string(a.size()) +
                       " vertices, graph has " +
                       std::to_string(g.vertex_count()));
  }
}

void CheckVertex(const ConflictGraph& g, Vertex j) {
  if (j < 1 || j > g.vertex_count()) {
    throw InvalidInput("vertex " + std::to_string(j) + " out of range");
  }
}

Vertex Other(const Edge& e, Vertex j) { return e.lo == j ? e.hi : e.lo; }

}  // namespace

ConflictGraph::ConflictGraph(int vertex_count,
                             std::span<const std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count) {
  Build(edges);
}

ConflictGraph::ConflictGraph(
    int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  Build(list);
}

void ConflictGraph::Build(std::span<const std::pair<Vertex, Vertex>> edges) {
  if (vertex_count_ < 1) throw InvalidInput("graph needs at least one vertex");
  for (auto [j, k] : edges) {
    if (j < 1 || j > vertex_count_ || k < 1 || k > vertex_count_) {
      throw InvalidInput("edge {" + std::to_string(j) + "," + std::to_string(k) +
                         "} out of range 1.." + std::to_string(vertex_count_));
    }
    if (j == k) {
      throw InvalidInput("self-loop at vertex " + std::to_string(j) +
                         ": conflict relation must be irreflexive");
    }
    edges_.push_back(Edge{std::min(j, k), std::max(j, k)});
  }
  std::sort(edges_.begin(), edges_.end());
  const auto unique_end = std::unique(edges_.begin(), edges_.end());
  if (unique_end != edges_.end()) {
    warnings_.push_back(std::to_string(edges_.end() - unique_end) +
                        " duplicate edge(s) merged");
    edges_.erase(unique_end, edges_.end());
  }

  neighbours_.assign(static_cast<std::size_t>(vertex_count_), {});
  incident_.assign(static_cast<std::size_t>(vertex_count_), {});
  // Edges are sorted by (lo, hi), so pushing in two passes keeps each
  // neighbour list ascending.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    neighbours_[e.hi - 1].push_back(e.lo);
    incident_[e.hi - 1].push_back(i);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    neighbours_[e.lo - 1].push_back(e.hi);
    incident_[e.lo - 1].push_back(i);
  }

  if (!connected()) warnings_.push_back("conflict graph is not connected");
}

std::span<const Vertex> ConflictGraph::neighbours(Vertex v) const {
  return neighbours_.at(static_cast<std::size_t>(v - 1));
}

std::span<const std::size_t> ConflictGraph::incident_edges(Vertex v) const {
  return incident_.at(static_cast<std::size_t>(v - 1));
}

std::optional<std::size_t> ConflictGraph::edge_index(Vertex j, Vertex k) const {
  if (j < 1 || j > vertex_count_ || k < 1 || k > vertex_count_) return {};
  const Edge key{std::min(j, k), std::max(j, k)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return {};
  return static_cast<std::size_t>(it - edges_.begin());
}

bool ConflictGraph::connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count_), false);
  std::deque<Vertex> queue{1};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : neighbours(v)) {
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

PriorityMap PriorityMap::FromPairs(
    const ConflictGraph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Vertex> dominators(g.edge_count(), 0);
  for (auto [j, k] : pairs) {
    auto edge = g.edge_index(j, k);
    if (!edge) {
      throw InvalidInput(std::to_string(j) + ">" + std::to_string(k) +
                         " is not an edge of the graph");
    }
    if (dominators[*edge] != 0) {
      throw InvalidInput("edge {" + std::to_string(j) + "," + std::to_string(k) +
                         "} oriented twice");
    }
    dominators[*edge] = j;
  }
  for (std::size_t i = 0; i < dominators.size(); ++i) {
    if (dominators[i] == 0) {
      const Edge& e = g.edges()[i];
      throw InvalidInput("edge {" + std::to_string(e.lo) + "," +
                         std::to_string(e.hi) + "} has no orientation");
    }
  }
  return PriorityMap(std::move(dominators));
}

bool PriorityMap::dominates(const ConflictGraph& g, Vertex j, Vertex k) const {
  auto edge = g.edge_index(j, k);
  return edge && dominators_.at(*edge) == j;
}

std::vector<std::pair<Vertex, Vertex>> PriorityMap::pairs(
    const ConflictGraph& g) const {
  CheckDomain(g, *this);
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(dominators_.size());
  for (std::size_t i = 0; i < dominators_.size(); ++i) {
    out.emplace_back(dominators_[i], Other(g.edges()[i], dominators_[i]));
  }
  return out;
}

std::vector<std::string> PriorityMap::to_strings(const ConflictGraph& g) const {
  std::vector<std::string> out;
  for (auto [j, k] : pairs(g)) {
    out.push_back(std::to_string(j) + ">" + std::to_string(k));
  }
  return out;
}

PriorityMap PriorityMap::FromStrings(const ConflictGraph& g,
                                     std::span<const std::string> items) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& item : items) {
    const auto sep = item.find('>');
    std::size_t used_j = 0;
    std::size_t used_k = 0;
    int j = 0;
    int k = 0;
    try {
      if (sep == std::string::npos) throw std::invalid_argument("no separator");
      const std::string lhs = item.substr(0, sep);
      const std::string rhs = item.substr(sep + 1);
      j = std::stoi(lhs, &used_j);
      k = std::stoi(rhs, &used_k);
      if (used_j != lhs.size() || used_k != rhs.size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed priority entry '" + item + "'");
    }
    pairs.emplace_back(j, k);
  }
  return FromPairs(g, pairs);
}

PriorityMap initial_priority(const ConflictGraph& g) {
  std::vector<Vertex> dominators;
  dominators.reserve(g.edge_count());
  for (const Edge& e : g.edges()) dominators.push_back(e.hi);
  return PriorityMap(std::move(dominators));
}

PriorityMap update_priority(const ConflictGraph& g, const PriorityMap& d,
                            const ActivityMap& a) {
  CheckDomain(g, d);
  CheckDomain(g, a);
  PriorityMap out = d;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Vertex j = d.dominator(i);
    const Vertex k = Other(g.edges()[i], j);
    const bool head_eats = a[j] == Activity::eating;
    const bool head_thinks_tail_hungry =
        a[j] == Activity::thinking && a[k] == Activity::hungry;
    if (head_eats || head_thinks_tail_hungry) out.set_dominator(i, k);
  }
  return out;
}

bool is_top(const ConflictGraph& g, const PriorityMap& d, Vertex j) {
  CheckDomain(g, d);
  CheckVertex(g, j);
  for (std::size_t e : g.incident_edges(j)) {
    if (d.dominator(e) != j) return false;
  }
  return true;
}

std::vector<Vertex> top_vertices(const ConflictGraph& g, const PriorityMap& d) {
  std::vector<Vertex> out;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    if (is_top(g, d, j)) out.push_back(j);
  }
  return out;
}

bool is_ready(const ConflictGraph& g, const PriorityMap& d, const ActivityMap& a,
              Vertex j) {
  CheckDomain(g, a);
  if (a[j] != Activity::hungry || !is_top(g, d, j)) return false;
  for (Vertex k : g.neighbours(j)) {
    if (a[k] == Activity::eating) return false;
  }
  return true;
}

CommandMap hub_commands(const ConflictGraph& g, const PriorityMap& d,
                        const ActivityMap& a) {
  CheckDomain(g, d);
  CheckDomain(g, a);
  CommandMap out(g.vertex_count(), Command::pass);
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    if (a[j] != Activity::hungry) continue;
    out[j] = is_ready(g, d, a, j) ? Command::force1 : Command::force0;
  }
  return out;
}

HubState initial_hub_state(const ConflictGraph& g) {
  return HubState{initial_priority(g), CommandMap(g.vertex_count(), Command::pass)};
}

HubState hub_step(const ConflictGraph& g, const HubState& s,
                  const ActivityMap& a) {
  PriorityMap next = update_priority(g, s.priority, a);
  CommandMap commands = hub_commands(g, next, a);
  return HubState{std::move(next), std::move(commands)};
}

std::vector<Vertex> subordinates(const ConflictGraph& g, const PriorityMap& d,
                                 Vertex j) {
  CheckDomain(g, d);
  CheckVertex(g, j);
  std::vector<Vertex> out;
  auto nbrs = g.neighbours(j);
  auto edges = g.incident_edges(j);
  for (std::size_t m = 0; m < nbrs.size(); ++m) {
    if (d.dominator(edges[m]) == j) out.push_back(nbrs[m]);
  }
  return out;
}

std::vector<Vertex> dominators(const ConflictGraph& g, const PriorityMap& d,
                               Vertex j) {
  CheckDomain(g, d);
  CheckVertex(g, j);
  std::vector<Vertex> out;
  auto nbrs = g.neighbours(j);
  auto edges = g.incident_edges(j);
  for (std::size_t m = 0; m < nbrs.size(); ++m) {
    if (d.dominator(edges[m]) != j) out.push_back(nbrs[m]);
  }
  return out;
}

std::vector<Vertex> transitive_dominators(const ConflictGraph& g,
                                          const PriorityMap& d, Vertex j) {
  CheckDomain(g, d);
  CheckVertex(g, j);
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::deque<Vertex> queue{j};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto nbrs = g.neighbours(v);
    auto edges = g.incident_edges(v);
    for (std::size_t m = 0; m < nbrs.size(); ++m) {
      const Vertex w = nbrs[m];
      if (d.dominator(edges[m]) == w && !seen[w - 1]) {
        seen[w - 1] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (seen[v - 1]) out.push_back(v);
  }
  return out;
}

bool is_acyclic(const ConflictGraph& g, const PriorityMap& d) {
  CheckDomain(g, d);
  // Kahn's algorithm on the dominance orientation.
  std::vector<int> indegree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++indegree[Other(g.edges()[i], d.dominator(i)) - 1];
  }
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (indegree[v - 1] == 0) queue.push_back(v);
  }
  int removed = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    ++removed;
    for (Vertex w : subordinates(g, d, v)) {
      if (--indegree[w - 1] == 0) queue.push_back(w);
    }
  }
  return removed == g.vertex_count();
}

bool is_safe(const ConflictGraph& g, const ActivityMap& a) {
  CheckDomain(g, a);
  for (const Edge& e : g.edges()) {
    if (a[e.lo] == Activity::eating && a[e.hi] == Activity::eating) return false;
  }
  return true;
}

std::string activity_string(const ActivityMap& a) {
  return activity_string(a.values());
}

std::string command_string(const CommandMap& c) {
  std::string out;
  for (Command x : c.values()) out.push_back(command_char(x));
  return out;
}

std::string choice_string(const MaybeChoiceMap& b) {
  std::string out;
  for (const MaybeChoice& x : b.values()) out.push_back(choice_char(x));
  return out;
}

ActivityMap parse_activity_map(const std::string& text) {
  std::vector<Activity> out;
  for (char ch : text) out.push_back(parse_activity(ch));
  return ActivityMap(std::move(out));
}

CommandMap parse_command_map(const std::string& text) {
  std::vector<Command> out;
  for (char ch : text) out.push_back(parse_command(ch));
  return CommandMap(std::move(out));
}

MaybeChoiceMap parse_choice_map(const std::string& text) {
  std::vector<MaybeChoice> out;
  for (char ch : text) out.push_back(parse_choice(ch));
  return MaybeChoiceMap(std::move(out));
}

namespace {

// Enumerates all maps of `n` entries over `alphabet` in lexicographic order.
template <class T, std::size_t N>
std::vector<std::vector<T>> AllMaps(std::size_t n, const T (&alphabet)[N]) {
  std::vector<std::vector<T>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<T>> next;
    for (const auto& prefix : out) {
      for (const T& x : alphabet) {
        auto extended = prefix;
        extended.push_back(x);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

Label HubStateLabel(const ConflictGraph& g, const HubState& s) {
  std::string prio;
  for (const auto& item : s.priority.to_strings(g)) {
    if (!prio.empty()) prio += ';';
    prio += item;
  }
  return pair_label(prio, command_string(s.commands));
}

}  // namespace

SystemSpec hub_controller_system(const ConflictGraph& g, std::size_t max_states) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::size_t count = 1;
  for (std::size_t i = 0; i < g.edge_count() + n; ++i) {
    count *= i < g.edge_count() ? 2 : 3;
    if (count > max_states) {
      throw ResourceLimit("hub state space exceeds " + std::to_string(max_states));
    }
  }

  std::vector<PriorityMap> orientations;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g.edge_count()); ++mask) {
    std::vector<Vertex> dom;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      dom.push_back((mask >> i) & 1 ? g.edges()[i].lo : g.edges()[i].hi);
    }
    orientations.emplace_back(std::move(dom));
  }
  const auto command_maps = AllMaps(n, kCommands);
  const auto activity_maps = AllMaps(n, kActivities);

  std::set<Label> states;
  std::set<Label> outputs;
  std::map<Label, Label> output_map;
  std::set<Transition> transitions;
  std::set<Label> inputs;
  for (const auto& acts : activity_maps) inputs.insert(activity_string(acts));

  for (const auto& d : orientations) {
    for (const auto& cmds : command_maps) {
      const HubState s{d, CommandMap(cmds)};
      const Label x = HubStateLabel(g, s);
      states.insert(x);
      outputs.insert(command_string(s.commands));
      output_map.emplace(x, command_string(s.commands));
      for (const auto& acts : activity_maps) {
        const HubState next = hub_step(g, s, ActivityMap(acts));
        transitions.insert({x, activity_string(acts), HubStateLabel(g, next)});
      }
    }
  }
  const Label initial = HubStateLabel(g, initial_hub_state(g));
  return SystemSpec(std::move(states), {initial}, std::move(inputs),
                    std::move(transitions), std::move(outputs),
                    std::move(output_map));
}

}  // namespace gdp
