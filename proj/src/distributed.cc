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

#include "gdp/distributed.h"

#include <algorithm>
#include <sstream>

#include "gdp/error.h"
#include "gdp/random.h"

namespace gdp {

NeighbourOrder::NeighbourOrder(VertexMap<std::vector<Vertex>> lists)
    : lists_(std::move(lists)) {
  const int n = lists_.size();
  positions_ = VertexMap<std::vector<std::size_t>>(
      n, std::vector<std::size_t>(static_cast<std::size_t>(n), 0));
  for (Vertex j = 1; j <= n; ++j) {
    for (std::size_t m = 0; m < lists_[j].size(); ++m) {
      positions_[j][lists_[j][m] - 1] = m + 1;
    }
  }
}

NeighbourOrder NeighbourOrder::Ascending(const ConflictGraph& g) {
  VertexMap<std::vector<Vertex>> lists(g.vertex_count(), {});
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    auto nbrs = g.neighbours(j);
    lists[j].assign(nbrs.begin(), nbrs.end());
  }
  return NeighbourOrder(std::move(lists));
}

NeighbourOrder NeighbourOrder::Descending(const ConflictGraph& g) {
  VertexMap<std::vector<Vertex>> lists(g.vertex_count(), {});
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    auto nbrs = g.neighbours(j);
    lists[j].assign(nbrs.rbegin(), nbrs.rend());
  }
  return NeighbourOrder(std::move(lists));
}

NeighbourOrder NeighbourOrder::Shuffled(const ConflictGraph& g,
                                        std::uint64_t seed) {
  VertexMap<std::vector<Vertex>> lists(g.vertex_count(), {});
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    auto nbrs = g.neighbours(j);
    auto& list = lists[j];
    list.assign(nbrs.begin(), nbrs.end());
    // Fisher-Yates with keyed draws; std::shuffle is not portable.
    for (std::size_t i = list.size(); i > 1; --i) {
      const auto pick = keyed_below(seed, static_cast<std::uint64_t>(j), i, i);
      std::swap(list[i - 1], list[pick]);
    }
  }
  return NeighbourOrder(std::move(lists));
}

NeighbourOrder NeighbourOrder::FromLists(const ConflictGraph& g,
                                         VertexMap<std::vector<Vertex>> lists) {
  if (lists.size() != g.vertex_count()) {
    throw InvalidInput("neighbour order must list every vertex");
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    std::vector<Vertex> sorted = lists[j];
    std::sort(sorted.begin(), sorted.end());
    auto nbrs = g.neighbours(j);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
      throw InvalidInput("neighbour order of vertex " + std::to_string(j) +
                         " is not a permutation of its neighbours");
    }
  }
  return NeighbourOrder(std::move(lists));
}

std::size_t NeighbourOrder::position(Vertex j, Vertex k) const {
  if (j < 1 || j > vertex_count() || k < 1 || k > vertex_count() ||
      positions_[j][k - 1] == 0) {
    throw InvalidInput(std::to_string(k) + " is not a neighbour of " +
                       std::to_string(j));
  }
  return positions_[j][k - 1];
}

std::string NeighbourOrder::to_string() const {
  std::ostringstream out;
  for (Vertex j = 1; j <= vertex_count(); ++j) {
    out << j << ':';
    for (Vertex k : lists_[j]) out << ' ' << k;
    out << '\n';
  }
  return out.str();
}

namespace {

void CheckView(const DominanceVector& d, const LocalActivityView& view) {
  if (view.size() != d.size() + 1) {
    throw InvalidInput("activity view has " + std::to_string(view.size()) +
                       " entries, expected " + std::to_string(d.size() + 1));
  }
}

}  // namespace

DominanceVector update_dominance_vector(const DominanceVector& d,
                                        const LocalActivityView& view) {
  CheckView(d, view);
  DominanceVector out(d.size());
  for (std::size_t m = 0; m < d.size(); ++m) {
    out[m] = update_dominance(d[m], view[0], view[m + 1]);
  }
  return out;
}

bool local_top(const DominanceVector& d) {
  return std::all_of(d.begin(), d.end(), [](bool bit) { return bit; });
}

bool local_ready(const DominanceVector& d, const LocalActivityView& view) {
  CheckView(d, view);
  if (view[0] != Activity::hungry || !local_top(d)) return false;
  return std::none_of(view.begin() + 1, view.end(),
                      [](Activity a) { return a == Activity::eating; });
}

Command local_command(const DominanceVector& d, const LocalActivityView& view) {
  CheckView(d, view);
  if (view[0] != Activity::hungry) return Command::pass;
  return local_ready(d, view) ? Command::force1 : Command::force0;
}

LocalControllerState local_step(const LocalControllerState& s,
                                const LocalActivityView& view) {
  DominanceVector next = update_dominance_vector(s.dominance, view);
  const Command command = local_command(next, view);
  return LocalControllerState{std::move(next), command};
}

LocalActivityView local_view(const NeighbourOrder& order, const ActivityMap& a,
                             Vertex j) {
  LocalActivityView view;
  view.reserve(order.degree(j) + 1);
  view.push_back(a[j]);
  for (Vertex k : order.neighbours(j)) view.push_back(a[k]);
  return view;
}

VertexMap<DominanceVector> scatter_priority(const ConflictGraph& g,
                                            const PriorityMap& d,
                                            const NeighbourOrder& order) {
  if (d.size() != g.edge_count() || order.vertex_count() != g.vertex_count()) {
    throw InvalidInput("priority map or neighbour order does not match graph");
  }
  VertexMap<DominanceVector> out(g.vertex_count(), {});
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    out[j].assign(order.degree(j), false);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const bool lo_wins = d.dominator(i) == e.lo;
    out[e.lo][order.position(e.lo, e.hi) - 1] = lo_wins;
    out[e.hi][order.position(e.hi, e.lo) - 1] = !lo_wins;
  }
  return out;
}

PriorityMap gather_priority(const ConflictGraph& g,
                            const VertexMap<DominanceVector>& vectors,
                            const NeighbourOrder& order) {
  if (vectors.size() != g.vertex_count() ||
      order.vertex_count() != g.vertex_count()) {
    throw InvalidInput("dominance vectors do not match graph");
  }
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    if (vectors[j].size() != order.degree(j)) {
      throw InvalidInput("dominance vector of vertex " + std::to_string(j) +
                         " has wrong length");
    }
  }
  std::vector<Vertex> dom;
  dom.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const bool lo_bit = vectors[e.lo][order.position(e.lo, e.hi) - 1];
    const bool hi_bit = vectors[e.hi][order.position(e.hi, e.lo) - 1];
    if (lo_bit == hi_bit) {
      throw IntegrityError("dominance bits of edge {" + std::to_string(e.lo) +
                           "," + std::to_string(e.hi) + "} are not complementary");
    }
    dom.push_back(lo_bit ? e.lo : e.hi);
  }
  return PriorityMap(std::move(dom));
}

VertexMap<LocalControllerState> initial_local_states(const ConflictGraph& g,
                                                     const NeighbourOrder& order) {
  VertexMap<LocalControllerState> out(g.vertex_count(), {});
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    for (Vertex k : order.neighbours(j)) out[j].dominance.push_back(j > k);
  }
  return out;
}

std::string dominance_string(const DominanceVector& d) {
  std::string out;
  for (bool bit : d) out.push_back(bit ? '1' : '0');
  return out;
}

DominanceVector parse_dominance(const std::string& text) {
  DominanceVector out;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw InvalidInput(std::string("bad dominance bit '") + ch + "'");
    }
    out.push_back(ch == '1');
  }
  return out;
}

}  // namespace gdp
