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

#include "recallnet/reconnect.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

void check_unit(double v, const char* key) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string(key) + " = " + std::to_string(v) + " out of range [0, 1]");
  }
}

// Each node's m most similar non-neighbours (ties to the lower id), as
// canonical pairs in ascending order without duplicates.
std::vector<Edge> top_m_candidates(const WeightedGraph& g, const SimilarityMatrix& x,
                                   std::size_t m) {
  const auto n = static_cast<NodeId>(g.node_count());
  std::vector<Edge> pairs;
  std::vector<NodeId> pool;
  for (NodeId i = 0; i < n; ++i) {
    pool.clear();
    for (NodeId j = 0; j < n; ++j) {
      if (j != i && !g.has_edge(i, j)) pool.push_back(j);
    }
    const std::size_t take = std::min(m, pool.size());
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end(),
                      [&](NodeId a, NodeId b) {
                        if (x(i, a) != x(i, b)) return x(i, a) > x(i, b);
                        return a < b;
                      });
    for (std::size_t r = 0; r < take; ++r) pairs.push_back(Edge::of(i, pool[r]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

std::string_view to_string(ThetaRule rule) {
  return rule == ThetaRule::kFixed ? "fixed" : "percentile75";
}

ThetaRule parse_theta_rule(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "fixed") return ThetaRule::kFixed;
  if (key == "percentile75" || key == "percentile75_of_initial") {
    return ThetaRule::kPercentile75OfInitial;
  }
  throw ValidationError("reconnect.theta_rule = '" + std::string(name) +
                        "' not one of fixed | percentile75");
}

std::string_view to_string(CandidateRule rule) {
  return rule == CandidateRule::kTopMPerNode ? "top_m" : "all";
}

CandidateRule parse_candidate_rule(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "all" || key == "all_non_edges") return CandidateRule::kAllNonEdges;
  if (key == "top_m" || key == "top_m_per_node") return CandidateRule::kTopMPerNode;
  throw ValidationError("reconnect.candidate_rule = '" + std::string(name) +
                        "' not one of all | top_m");
}

void ReconnectPolicy::validate() const {
  check_unit(rho, "reconnect.rho");
  check_unit(theta, "reconnect.theta");
  if (m == 0) throw ValidationError("reconnect.m must be >= 1");
}

double nearest_rank_percentile(std::vector<double> values, double q) {
  if (values.empty()) throw ValidationError("percentile of an empty set");
  if (!(q > 0.0 && q <= 1.0)) throw ValidationError("percentile rank must lie in (0, 1]");
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(values.size()) - 1e-9));
  const std::size_t index = std::clamp<std::size_t>(rank, 1, values.size()) - 1;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(index),
                   values.end());
  return values[index];
}

double compute_threshold(const SimilarityMatrix& initial, const ReconnectPolicy& policy) {
  if (policy.theta_rule == ThetaRule::kFixed) return policy.theta;
  if (initial.size() < 2) {
    throw ValidationError("threshold needs a similarity matrix with at least one pair");
  }
  return nearest_rank_percentile(initial.upper_triangle(), 0.75);
}

std::size_t reconnect(WeightedGraph& g, const SimilarityMatrix& x, const ReconnectPolicy& policy,
                      double threshold, CounterRng& rng, TimeStep now) {
  policy.validate();
  if (x.size() != g.node_count()) {
    throw ValidationError("reconnect: similarity matrix does not match the graph size");
  }
  if (policy.rho == 0.0) return 0;

  std::size_t added = 0;
  auto consider = [&](NodeId i, NodeId j) {
    const double sim = x(i, j);
    if (!(sim > threshold)) return;
    if (rng.bernoulli(policy.rho)) {
      g.add_edge(i, j, sim, now);
      ++added;
    }
  };

  if (policy.candidate_rule == CandidateRule::kTopMPerNode) {
    // Candidates are fixed before any insertion.
    for (const Edge& e : top_m_candidates(g, x, policy.m)) consider(e.u, e.v);
    return added;
  }
  // Insertions during the scan only affect pairs already visited.
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) consider(i, j);
    }
  }
  return added;
}

}  // namespace recallnet
