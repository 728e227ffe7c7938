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

#include "recallnet/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

// Competition ranks ("1224") of `values` in descending order. Values within
// a relative 1e-9 of a group's leader share its rank, so betweenness of
// symmetric edges ties despite summation-order noise.
std::vector<std::size_t> descending_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::size_t> rank(values.size(), 0);
  double leader = 0.0;
  std::size_t leader_rank = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const double v = values[order[pos]];
    const double tol = 1e-9 * std::max(1.0, std::fabs(leader));
    if (pos == 0 || leader - v > tol) {
      leader = v;
      leader_rank = pos + 1;
    }
    rank[order[pos]] = leader_rank;
  }
  return rank;
}

}  // namespace

std::string_view to_string(AttackCriterion criterion) {
  switch (criterion) {
    case AttackCriterion::kMaxWeight: return "max_weight";
    case AttackCriterion::kCompositePredictability: return "composite";
    case AttackCriterion::kStaleness: return "staleness";
  }
  return "?";
}

AttackCriterion parse_attack_criterion(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "max_weight" || key == "maxweight") return AttackCriterion::kMaxWeight;
  if (key == "composite" || key == "composite_predictability") {
    return AttackCriterion::kCompositePredictability;
  }
  if (key == "staleness") return AttackCriterion::kStaleness;
  throw ValidationError("adversary.criterion = '" + std::string(name) +
                        "' not one of max_weight | composite | staleness");
}

void AdversaryPolicy::validate() const {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw ValidationError("adversary.fraction = " + std::to_string(fraction) +
                          " out of range [0, 1]");
  }
}

std::size_t AdversaryPolicy::k_for(std::size_t edges) const {
  if (absolute_k) return std::min(*absolute_k, edges);
  // Guard against 0.1 * 19900 landing a hair above 1990.
  const double raw = fraction * static_cast<double>(edges);
  const auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::min(k, edges);
}

std::vector<double> edge_betweenness(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  // Incidence lists carrying edge ids in g.edges() order.
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> arcs(n);
  {
    std::size_t id = 0;
    for (const auto& [e, s] : g.edges()) {
      arcs[e.u].emplace_back(e.v, id);
      arcs[e.v].emplace_back(e.u, id);
      ++id;
    }
  }
  std::vector<double> score(g.edge_count(), 0.0);
  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> dependency(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (arcs[s].empty()) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (const auto& [w, id] : arcs[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (std::size_t pos = order.size(); pos-- > 1;) {
      const NodeId w = order[pos];
      for (const auto& [v, id] : arcs[w]) {
        if (dist[v] != dist[w] - 1) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + dependency[w]);
        score[id] += c;
        dependency[v] += c;
      }
    }
  }
  // Every pair was accumulated from both ends.
  for (double& b : score) b *= 0.5;
  return score;
}

std::vector<Edge> select_top_k(const WeightedGraph& g, const AdversaryPolicy& policy,
                               TimeStep now) {
  policy.validate();
  const std::size_t k = policy.k_for(g.edge_count());
  if (k == 0) return {};

  std::vector<Edge> edges;
  std::vector<EdgeState> states;
  edges.reserve(g.edge_count());
  states.reserve(g.edge_count());
  for (const auto& [e, s] : g.edges()) {
    edges.push_back(e);
    states.push_back(s);
  }

  // Lower key = more predictable. Edges are already in lexicographic
  // order, so a stable sort supplies the tie-break.
  std::vector<double> key(edges.size());
  switch (policy.criterion) {
    case AttackCriterion::kMaxWeight:
      for (std::size_t i = 0; i < edges.size(); ++i) key[i] = -states[i].weight;
      break;
    case AttackCriterion::kStaleness:
      for (std::size_t i = 0; i < edges.size(); ++i) {
        key[i] = -static_cast<double>(now - states[i].last_active);
      }
      break;
    case AttackCriterion::kCompositePredictability: {
      const auto by_betweenness = descending_ranks(edge_betweenness(g));
      std::vector<double> neg_weight(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) neg_weight[i] = -states[i].weight;
      const auto by_lightness = descending_ranks(neg_weight);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        key[i] = static_cast<double>(by_betweenness[i] + by_lightness[i]);
      }
      break;
    }
  }

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<Edge> chosen;
  chosen.reserve(k);
  for (std::size_t i = 0; i < k; ++i) chosen.push_back(edges[order[i]]);
  return chosen;
}

double AttackReport::total_loss() const {
  double sum = 0.0;
  for (const auto& r : removals) sum += r.loss;
  return sum;
}

AttackReport attack(WeightedGraph& g, const AdversaryPolicy& policy, TimeStep now) {
  AttackReport report;
  report.utility_before = g.total_weight();
  for (const Edge& e : select_top_k(g, policy, now)) {
    Removal r;
    r.edge = e;
    r.loss = g.weight(e.u, e.v);
    r.disconnected = !connected_without_edge(g, e.u, e.v);
    g.remove_edge(e.u, e.v);
    report.removals.push_back(r);
  }
  return report;
}

}  // namespace recallnet
