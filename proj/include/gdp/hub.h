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

#ifndef GDP_HUB_H_
#define GDP_HUB_H_

// Centralised hub controller over a conflict graph.
//
// The hub keeps a priority map orienting every edge of the conflict graph
// towards its dominated endpoint. On each activity map it first updates the
// orientation (eaters become dominated by all neighbours, hungry vertices
// dominate thinking ones) and then commands every hungry vertex: eat when it
// dominates all neighbours and none of them eats, stay hungry otherwise.
// Vertices are numbered 1..n.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdp/philosopher.h"

namespace gdp {

using Vertex = int;

// Unordered edge {lo, hi} with lo < hi.
struct Edge {
  Vertex lo;
  Vertex hi;

  auto operator<=>(const Edge&) const = default;
};

class ConflictGraph {
 public:
  // Validates vertex ranges and irreflexivity (InvalidInput). Duplicate edges
  // are merged and disconnected graphs accepted; both cases are recorded in
  // warnings().
  ConflictGraph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
  ConflictGraph(int vertex_count,
                std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbours of v in ascending order.
  std::span<const Vertex> neighbours(Vertex v) const;
  // Edge indices parallel to neighbours(v).
  std::span<const std::size_t> incident_edges(Vertex v) const;
  std::optional<std::size_t> edge_index(Vertex j, Vertex k) const;

  bool connected() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool operator==(const ConflictGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  void Build(std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::string> warnings_;
};

// Total map from vertex ids 1..n to values.
template <class T>
class VertexMap {
 public:
  VertexMap() = default;
  VertexMap(int n, T value) : values_(static_cast<std::size_t>(n), value) {}
  explicit VertexMap(std::vector<T> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  T& operator[](Vertex v) { return values_[static_cast<std::size_t>(v - 1)]; }
  const T& operator[](Vertex v) const {
    return values_[static_cast<std::size_t>(v - 1)];
  }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  bool operator==(const VertexMap&) const = default;

 private:
  std::vector<T> values_;
};

using ActivityMap = VertexMap<Activity>;
using ChoiceMap = VertexMap<Choice>;
using MaybeChoiceMap = VertexMap<MaybeChoice>;
using CommandMap = VertexMap<Command>;

// Orientation of every edge, stored as the dominating endpoint per edge
// index of the graph it was built for. Acyclicity is not enforced here.
class PriorityMap {
 public:
  PriorityMap() = default;
  explicit PriorityMap(std::vector<Vertex> dominators)
      : dominators_(std::move(dominators)) {}

  // From directed pairs (j, k) meaning j dominates k. Throws InvalidInput
  // unless every edge of `g` is oriented exactly once.
  static PriorityMap FromPairs(const ConflictGraph& g,
                               std::span<const std::pair<Vertex, Vertex>> pairs);

  std::size_t size() const { return dominators_.size(); }
  Vertex dominator(std::size_t edge) const { return dominators_[edge]; }
  void set_dominator(std::size_t edge, Vertex v) { dominators_[edge] = v; }

  // True if {j,k} is an edge oriented j -> k.
  bool dominates(const ConflictGraph& g, Vertex j, Vertex k) const;

  // Directed pairs in edge order.
  std::vector<std::pair<Vertex, Vertex>> pairs(const ConflictGraph& g) const;

  // "j>k" strings, one per edge, in edge order.
  std::vector<std::string> to_strings(const ConflictGraph& g) const;
  static PriorityMap FromStrings(const ConflictGraph& g,
                                 std::span<const std::string> items);

  bool operator==(const PriorityMap&) const = default;

 private:
  std::vector<Vertex> dominators_;
};

// Every edge oriented from its larger endpoint.
PriorityMap initial_priority(const ConflictGraph& g);

// Edge-wise update, applied to all edges of the old map at once: an edge
// j -> k reverses when j eats, or when j thinks while k is hungry.
PriorityMap update_priority(const ConflictGraph& g, const PriorityMap& d,
                            const ActivityMap& a);

bool is_top(const ConflictGraph& g, const PriorityMap& d, Vertex j);
// Vertices dominating all their neighbours (isolated vertices included),
// ascending.
std::vector<Vertex> top_vertices(const ConflictGraph& g, const PriorityMap& d);

// Hungry, top and without an eating neighbour.
bool is_ready(const ConflictGraph& g, const PriorityMap& d, const ActivityMap& a,
              Vertex j);

// pass for thinking/eating vertices, force1 for ready ones, force0 for the
// remaining hungry ones.
CommandMap hub_commands(const ConflictGraph& g, const PriorityMap& d,
                        const ActivityMap& a);

struct HubState {
  PriorityMap priority;
  CommandMap commands;

  bool operator==(const HubState&) const = default;
};

HubState initial_hub_state(const ConflictGraph& g);

// Updates the priority map, then computes commands from the updated map.
HubState hub_step(const ConflictGraph& g, const HubState& s, const ActivityMap& a);

// Subordinates (dominated neighbours) and dominators of j, ascending.
std::vector<Vertex> subordinates(const ConflictGraph& g, const PriorityMap& d,
                                 Vertex j);
std::vector<Vertex> dominators(const ConflictGraph& g, const PriorityMap& d,
                               Vertex j);
// Transitive closure of j under the dominator relation, excluding j unless
// it lies on a cycle. Ascending.
std::vector<Vertex> transitive_dominators(const ConflictGraph& g,
                                          const PriorityMap& d, Vertex j);

bool is_acyclic(const ConflictGraph& g, const PriorityMap& d);

// No edge with both endpoints eating.
bool is_safe(const ConflictGraph& g, const ActivityMap& a);

// Extensional hub for small graphs: states (priority map, command map),
// inputs activity maps, output the command map. Throws ResourceLimit for
// graphs with more than `max_states` states.
SystemSpec hub_controller_system(const ConflictGraph& g,
                                 std::size_t max_states = 100'000);

std::string activity_string(const ActivityMap& a);
std::string command_string(const CommandMap& c);
std::string choice_string(const MaybeChoiceMap& b);
ActivityMap parse_activity_map(const std::string& text);
CommandMap parse_command_map(const std::string& text);
MaybeChoiceMap parse_choice_map(const std::string& text);

}  // namespace gdp

#endif  // GDP_HUB_H_
