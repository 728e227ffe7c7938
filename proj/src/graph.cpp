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

#include "recallnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "recallnet/errors.hpp"

namespace recallnet {

WeightedGraph::WeightedGraph(std::size_t node_count) : adjacency_(node_count) {}

void WeightedGraph::check_node(NodeId i) const {
  if (i >= adjacency_.size()) {
    throw ValidationError("node " + std::to_string(i) + " out of range [0, " +
                          std::to_string(adjacency_.size()) + ")");
  }
}

void WeightedGraph::add_edge(NodeId i, NodeId j, double weight, TimeStep t) {
  check_node(i);
  check_node(j);
  if (i == j) throw ValidationError("self-loop on node " + std::to_string(i));
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw ValidationError("edge weight must be finite and >= 0");
  }
  if (t < 0) throw ValidationError("edge timestamp must be >= 0");

  const Edge e = Edge::of(i, j);
  auto [it, inserted] = edges_.try_emplace(e, EdgeState{weight, t});
  if (!inserted) {
    it->second = EdgeState{weight, t};
    return;
  }
  auto insert_sorted = [](std::vector<NodeId>& list, NodeId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[e.u], e.v);
  insert_sorted(adjacency_[e.v], e.u);
}

bool WeightedGraph::remove_edge(NodeId i, NodeId j) {
  if (i >= adjacency_.size() || j >= adjacency_.size() || i == j) return false;
  const Edge e = Edge::of(i, j);
  if (edges_.erase(e) == 0) return false;
  auto erase_sorted = [](std::vector<NodeId>& list, NodeId x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    list.erase(it);
  };
  erase_sorted(adjacency_[e.u], e.v);
  erase_sorted(adjacency_[e.v], e.u);
  return true;
}

bool WeightedGraph::has_edge(NodeId i, NodeId j) const {
  if (i >= adjacency_.size() || j >= adjacency_.size() || i == j) return false;
  if (adjacency_[i].size() > adjacency_[j].size()) std::swap(i, j);
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::optional<EdgeState> WeightedGraph::edge(NodeId i, NodeId j) const {
  auto it = edges_.find(Edge::of(i, j));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

double WeightedGraph::weight(NodeId i, NodeId j) const {
  auto it = edges_.find(Edge::of(i, j));
  return it == edges_.end() ? 0.0 : it->second.weight;
}

void WeightedGraph::transform_weights(
    const std::function<double(const Edge&, const EdgeState&)>& fn) {
  for (auto& [e, state] : edges_) {
    const double w = fn(e, state);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("weight transform produced a negative or non-finite weight");
    }
    state.weight = w;
  }
}

std::size_t WeightedGraph::prune_below(double epsilon) {
  std::vector<Edge> doomed;
  for (const auto& [e, state] : edges_) {
    if (state.weight < epsilon) doomed.push_back(e);
  }
  for (const Edge& e : doomed) remove_edge(e.u, e.v);
  return doomed.size();
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& [e, state] : edges_) sum += state.weight;
  return sum;
}

TimeStep WeightedGraph::latest_activity() const {
  TimeStep latest = 0;
  for (const auto& [e, state] : edges_) latest = std::max(latest, state.last_active);
  return latest;
}

std::vector<std::vector<NodeId>> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<NodeId>> components;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> members;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

std::size_t component_count(const WeightedGraph& g) { return connected_components(g).size(); }

std::vector<NodeId> largest_component(const WeightedGraph& g) {
  auto components = connected_components(g);
  if (components.empty()) return {};
  // Components come ordered by smallest member, so the first maximum wins ties.
  auto best = std::max_element(components.begin(), components.end(),
                               [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return std::move(*best);
}

std::vector<int> bfs_distances(const WeightedGraph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> frontier{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId v = frontier[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

double average_path_length(const WeightedGraph& g) {
  const auto component = largest_component(g);
  if (component.size() < 2) {
    throw UndefinedMetricError("average path length undefined: largest component has " +
                               std::to_string(component.size()) + " node(s)");
  }
  // Every BFS from inside the component reaches exactly the component.
  double total = 0.0;
  for (NodeId s : component) {
    const auto dist = bfs_distances(g, s);
    std::int64_t row = 0;
    for (NodeId t : component) row += dist[t];
    total += static_cast<double>(row);
  }
  const double k = static_cast<double>(component.size());
  return total / (k * (k - 1.0));
}

bool connected_without_edge(const WeightedGraph& g, NodeId a, NodeId b) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> frontier{a};
  seen[a] = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId v = frontier[head];
    for (NodeId w : g.neighbors(v)) {
      if (v == a && w == b) continue;
      if (v == b && w == a) continue;
      if (w == b) return true;
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  return false;
}

namespace {

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

void write_snapshot(std::ostream& out, const WeightedGraph& g, TimeStep now) {
  out << "# nodes=" << g.node_count() << " time=" << now << '\n';
  for (const auto& [e, state] : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_weight(state.weight) << ' ' << state.last_active
        << '\n';
  }
}

Snapshot read_snapshot(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ValidationError("snapshot: missing header line");
  std::size_t nodes = 0;
  long long time = 0;
  if (std::sscanf(header.c_str(), "# nodes=%zu time=%lld", &nodes, &time) != 2) {
    throw ValidationError("snapshot: malformed header '" + header + "'");
  }
  Snapshot snap{WeightedGraph(nodes), static_cast<TimeStep>(time)};
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long i = -1, j = -1, t = -1;
    double w = -1.0;
    if (!(fields >> i >> j >> w >> t) || i < 0 || j < 0) {
      throw ValidationError("snapshot: malformed edge on line " + std::to_string(line_no));
    }
    snap.graph.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), w, t);
  }
  return snap;
}

std::uint64_t snapshot_hash(const WeightedGraph& g, TimeStep now) {
  std::ostringstream text;
  write_snapshot(text, g, now);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace recallnet
