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

// Brute-force reference implementations used only by tests. Each one takes
// a different route from the library code it checks.
#ifndef RECALLNET_TESTS_ORACLES_HPP_
#define RECALLNET_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "recallnet/bipartite.hpp"
#include "recallnet/graph.hpp"
#include "recallnet/similarity.hpp"

namespace recallnet::oracle {

using Matrix = std::vector<std::vector<double>>;

inline std::vector<std::vector<int>> adjacency_matrix(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [e, s] : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Floyd-Warshall hop distances; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs_hops(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  const int inf = std::numeric_limits<int>::max() / 4;
  auto a = adjacency_matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Union-find labelling; returns the partition as sorted sets ordered by
// smallest member.
inline std::vector<std::vector<NodeId>> union_find_components(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, s] : g.edges()) parent[find(e.u)] = find(e.v);
  std::vector<std::vector<NodeId>> groups(n);
  for (NodeId v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<NodeId>> out;
  for (auto& gr : groups)
    if (!gr.empty()) out.push_back(gr);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

// Average path length from all-pairs distances over the largest component
// (ties -> component with the lowest node id).
inline double average_path_length(const WeightedGraph& g) {
  auto comps = union_find_components(g);
  std::size_t best = 0;
  for (std::size_t c = 1; c < comps.size(); ++c)
    if (comps[c].size() > comps[best].size()) best = c;
  const auto& cc = comps[best];
  auto d = all_pairs_hops(g);
  double sum = 0;
  for (NodeId i : cc)
    for (NodeId j : cc)
      if (i != j) sum += d[i][j];
  const double k = static_cast<double>(cc.size());
  return sum / (k * (k - 1));
}

// Edge betweenness by enumerating, for every unordered pair (s, t), all
// shortest paths via path counts from both ends: an edge {u, v} lies on
// sigma_su * sigma_vt of them when d(s,u) + 1 + d(v,t) == d(s,t).
inline double edge_betweenness(const WeightedGraph& g, Edge e) {
  const std::size_t n = g.node_count();
  auto d = all_pairs_hops(g);
  auto a = adjacency_matrix(g);
  // sigma[s][t]: number of shortest s-t paths, by dynamic programming over
  // increasing distance.
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    sigma[s][s] = 1;
    int maxd = 0;
    for (std::size_t t = 0; t < n; ++t) maxd = std::max(maxd, d[s][t]);
    for (int level = 1; level <= maxd; ++level)
      for (std::size_t t = 0; t < n; ++t) {
        if (d[s][t] != level) continue;
        for (std::size_t p = 0; p < n; ++p)
          if (a[p][t] && d[s][p] == level - 1) sigma[s][t] += sigma[s][p];
      }
  }
  double total = 0;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] <= 0) continue;
      double through = 0;
      for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (d[s][x] >= 0 && d[y][t] >= 0 && d[s][x] + 1 + d[y][t] == d[s][t]) {
          through += sigma[s][x] * sigma[y][t];
        }
      }
      total += through / sigma[s][t];
    }
  return total;
}

// Literal quadruple loop over i, k, j with the kernel written out inline.
inline double first_mode(const BipartiteIncidence& b, const SimilarityMatrix& x,
                         const std::vector<double>& retention, const std::vector<double>& t) {
  double h = 0;
  for (std::size_t i = 0; i < b.mode1_count(); ++i)
    for (std::size_t k = 0; k < b.mode1_count(); ++k) {
      if (i == k) continue;
      for (std::size_t j = 0; j < b.mode2_count(); ++j) {
        const double g = std::exp(std::log(retention[i]) * std::fabs(t[i] - t[k]));
        h += b.get(i, j) * b.get(k, j) * x(static_cast<NodeId>(i), static_cast<NodeId>(k)) * g;
      }
    }
  return h;
}

inline double second_mode(const BipartiteIncidence& b, const SimilarityMatrix& x,
                          const std::vector<double>& retention, const std::vector<double>& t) {
  double h = 0;
  for (std::size_t i = 0; i < b.mode2_count(); ++i)
    for (std::size_t k = 0; k < b.mode2_count(); ++k) {
      if (i == k) continue;
      for (std::size_t j = 0; j < b.mode1_count(); ++j) {
        const double g = std::exp(std::log(retention[i]) * std::fabs(t[i] - t[k]));
        h += b.get(j, i) * b.get(j, k) * x(static_cast<NodeId>(i), static_cast<NodeId>(k)) * g;
      }
    }
  return h;
}

// Random graph with edge probability p and weights in (0, 1].
inline WeightedGraph random_graph(std::size_t n, double p, std::mt19937_64& rng,
                                  bool unit_weights = false) {
  WeightedGraph g(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (u(rng) < p) g.add_edge(i, j, unit_weights ? 1.0 : 1.0 - u(rng), 0);
  return g;
}

}  // namespace recallnet::oracle

#endif  // RECALLNET_TESTS_ORACLES_HPP_
