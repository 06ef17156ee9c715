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

#ifndef GDP_DISTRIBUTED_H_
#define GDP_DISTRIBUTED_H_

// Per-vertex local controllers.
//
// Each vertex j orders its neighbours as a vector indexed 1..deg(j) and keeps
// one dominance bit per neighbour: bit m is true when j dominates its m-th
// neighbour. The bits of the two endpoints of an edge are complementary, so
// the union of all vectors reconstructs the hub's priority map.

#include <cstdint>
#include <vector>

#include "gdp/hub.h"

namespace gdp {

class NeighbourOrder {
 public:
  static NeighbourOrder Ascending(const ConflictGraph& g);
  static NeighbourOrder Descending(const ConflictGraph& g);
  // Deterministic per-vertex permutation derived from `seed`.
  static NeighbourOrder Shuffled(const ConflictGraph& g, std::uint64_t seed);
  // Throws InvalidInput unless lists[j] is a permutation of j's neighbours.
  static NeighbourOrder FromLists(const ConflictGraph& g,
                                  VertexMap<std::vector<Vertex>> lists);

  int vertex_count() const { return lists_.size(); }
  std::size_t degree(Vertex j) const { return lists_[j].size(); }
  const std::vector<Vertex>& neighbours(Vertex j) const { return lists_[j]; }
  // m-th neighbour of j, 1-based.
  Vertex neighbour(Vertex j, std::size_t m) const { return lists_[j].at(m - 1); }
  // 1-based index of k among j's neighbours; throws InvalidInput if absent.
  std::size_t position(Vertex j, Vertex k) const;

  // Text form: one "j: k1 k2 ..." line per vertex.
  std::string to_string() const;

  bool operator==(const NeighbourOrder&) const = default;

 private:
  explicit NeighbourOrder(VertexMap<std::vector<Vertex>> lists);

  VertexMap<std::vector<Vertex>> lists_;
  // positions_[j][k-1] = index of k in lists_[j], 0 if not a neighbour.
  VertexMap<std::vector<std::size_t>> positions_;
};

using DominanceVector = std::vector<bool>;

// Activities seen by a local controller: index 0 is the vertex itself,
// index m its m-th neighbour.
using LocalActivityView = std::vector<Activity>;

struct LocalControllerState {
  DominanceVector dominance;
  Command command = Command::pass;

  bool operator==(const LocalControllerState&) const = default;
};

// Update of one dominance bit from the activities of the owner and of the
// neighbour. Same activity on both ends keeps the bit.
constexpr bool update_dominance(bool d, Activity self, Activity other) {
  using enum Activity;
  if (self == other) return d;
  if (self == thinking) return other == eating;    // t,h -> false; t,e -> true
  if (self == hungry) return true;                 // h,e and h,t
  return false;                                    // e,h and e,t
}

// Bitwise update. Throws InvalidInput unless view.size() == d.size() + 1.
DominanceVector update_dominance_vector(const DominanceVector& d,
                                        const LocalActivityView& view);

bool local_top(const DominanceVector& d);
bool local_ready(const DominanceVector& d, const LocalActivityView& view);
Command local_command(const DominanceVector& d, const LocalActivityView& view);

// New vector first, then the command from the new vector.
LocalControllerState local_step(const LocalControllerState& s,
                                const LocalActivityView& view);

LocalActivityView local_view(const NeighbourOrder& order, const ActivityMap& a,
                             Vertex j);

// Per-vertex vectors encoding `d`.
VertexMap<DominanceVector> scatter_priority(const ConflictGraph& g,
                                            const PriorityMap& d,
                                            const NeighbourOrder& order);

// Inverse of scatter_priority. Throws IntegrityError naming the first edge
// whose two bits are not complementary, InvalidInput on shape mismatches.
PriorityMap gather_priority(const ConflictGraph& g,
                            const VertexMap<DominanceVector>& vectors,
                            const NeighbourOrder& order);

VertexMap<LocalControllerState> initial_local_states(const ConflictGraph& g,
                                                     const NeighbourOrder& order);

std::string dominance_string(const DominanceVector& d);
DominanceVector parse_dominance(const std::string& text);

}  // namespace gdp

#endif  // GDP_DISTRIBUTED_H_
