// Copyright 2026 The recallnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RECALLNET_GRAPH_HPP_
#define RECALLNET_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace recallnet {

using NodeId = std::uint32_t;
// Discrete simulation step. Always >= 0.
using TimeStep = std::int64_t;

// Unordered node pair stored canonically with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge of(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  auto operator<=>(const Edge&) const = default;
};

struct EdgeState {
  double weight = 0.0;
  TimeStep last_active = 0;

  bool operator==(const EdgeState&) const = default;
};

// Undirected weighted graph with per-edge interaction timestamps.
//
// Each edge lives exactly once in an ordered map keyed by its canonical
// pair, so iteration order (and therefore every floating-point fold over
// the edges) is a pure function of the edge set. Sorted neighbor lists are
// kept alongside for traversal.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t node_count);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Inserts or overwrites the edge {i, j}. Throws ValidationError on a
  // self-loop, an out-of-range endpoint, a negative or non-finite weight,
  // or a negative time.
  void add_edge(NodeId i, NodeId j, double weight, TimeStep t);

  // Returns false when the edge was absent.
  bool remove_edge(NodeId i, NodeId j);

  bool has_edge(NodeId i, NodeId j) const;
  std::optional<EdgeState> edge(NodeId i, NodeId j) const;
  // 0 for absent edges.
  double weight(NodeId i, NodeId j) const;

  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_.at(i); }
  std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }

  const std::map<Edge, EdgeState>& edges() const { return edges_; }

  // Replaces every weight with fn(edge, state). Timestamps are untouched.
  void transform_weights(const std::function<double(const Edge&, const EdgeState&)>& fn);

  // Drops every edge whose weight is strictly below `epsilon`; returns the
  // number removed.
  std::size_t prune_below(double epsilon);

  // Sum of all edge weights, recomputed in canonical edge order.
  double total_weight() const;

  // Largest last_active over all edges, 0 for an empty graph.
  TimeStep latest_activity() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  void check_node(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::map<Edge, EdgeState> edges_;
};

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const WeightedGraph& g);

std::size_t component_count(const WeightedGraph& g);

// Largest connected component; ties go to the component holding the
// lowest node id.
std::vector<NodeId> largest_component(const WeightedGraph& g);

// Unweighted BFS distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const WeightedGraph& g, NodeId source);

// Mean hop-count distance over ordered pairs of the largest component.
// Throws UndefinedMetricError when that component has fewer than 2 nodes.
double average_path_length(const WeightedGraph& g);

// True when some path joins a and b without using the edge {a, b} itself.
bool connected_without_edge(const WeightedGraph& g, NodeId a, NodeId b);

// Edge-list snapshot:
//   # nodes=N time=t
//   i j weight last_active
// Weights are written with 17 significant digits so a read-back is exact.
void write_snapshot(std::ostream& out, const WeightedGraph& g, TimeStep now);

struct Snapshot {
  WeightedGraph graph;
  TimeStep time = 0;
};

Snapshot read_snapshot(std::istream& in);

// 64-bit FNV-1a over the snapshot text. Used for regression pinning.
std::uint64_t snapshot_hash(const WeightedGraph& g, TimeStep now);

}  // namespace recallnet

#endif  // RECALLNET_GRAPH_HPP_
