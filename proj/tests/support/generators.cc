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

#include "support/generators.h"

#include <algorithm>
#include <numeric>

namespace gdp::testing {

namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

ConflictGraph random_connected_graph(Rng& rng, int min_n, int max_n,
                                     double density) {
  const int n = UniformInt(rng, min_n, max_n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(perm[i], perm[UniformInt(rng, 0, i - 1)]);
  }
  for (Vertex j = 1; j <= n; ++j) {
    for (Vertex k = j + 1; k <= n; ++k) {
      if (Coin(rng, density)) edges.emplace_back(j, k);
    }
  }
  // Duplicates are merged by the graph; drop them here to keep it quiet.
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ConflictGraph(n, edges);
}

PriorityMap random_orientation(const ConflictGraph& g, Rng& rng) {
  std::vector<Vertex> dom;
  for (const Edge& e : g.edges()) dom.push_back(Coin(rng, 0.5) ? e.lo : e.hi);
  return PriorityMap(std::move(dom));
}

PriorityMap random_acyclic_orientation(const ConflictGraph& g, Rng& rng) {
  std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()));
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<Vertex> dom;
  for (const Edge& e : g.edges()) {
    dom.push_back(rank[e.lo - 1] > rank[e.hi - 1] ? e.lo : e.hi);
  }
  return PriorityMap(std::move(dom));
}

ActivityMap random_activity_map(int n, Rng& rng) {
  ActivityMap a(n, Activity::thinking);
  for (Vertex j = 1; j <= n; ++j) a[j] = kActivities[UniformInt(rng, 0, 2)];
  return a;
}

ActivityMap random_safe_activity_map(const ConflictGraph& g, Rng& rng) {
  ActivityMap a = random_activity_map(g.vertex_count(), rng);
  for (const Edge& e : g.edges()) {
    if (a[e.lo] == Activity::eating && a[e.hi] == Activity::eating) {
      a[Coin(rng, 0.5) ? e.lo : e.hi] =
          Coin(rng, 0.5) ? Activity::thinking : Activity::hungry;
    }
  }
  return a;
}

SystemSpec random_system(Rng& rng, int max_states,
                         const std::vector<Label>& alphabet,
                         double edge_probability) {
  const int n = UniformInt(rng, 1, max_states);
  std::set<Label> states;
  for (int i = 0; i < n; ++i) states.insert("s" + std::to_string(i));
  std::set<Label> inputs;
  for (const auto& u : alphabet) {
    if (Coin(rng, 0.6)) inputs.insert(u);
  }
  if (inputs.empty()) inputs.insert(alphabet[UniformInt(rng, 0,
      static_cast<int>(alphabet.size()) - 1)]);
  std::set<Label> initial;
  for (const auto& x : states) {
    if (Coin(rng, 0.5)) initial.insert(x);
  }
  if (initial.empty()) initial.insert(*states.begin());
  std::set<Transition> transitions;
  for (const auto& x : states) {
    for (const auto& u : inputs) {
      for (const auto& y : states) {
        if (Coin(rng, edge_probability)) transitions.insert({x, u, y});
      }
    }
  }
  return SystemSpec::Transparent(std::move(states), std::move(initial),
                                 std::move(inputs), std::move(transitions));
}

}  // namespace gdp::testing
