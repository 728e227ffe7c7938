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

#ifndef RECALLNET_RECONNECT_HPP_
#define RECALLNET_RECONNECT_HPP_

#include <cstddef>
#include <string_view>

#include "recallnet/graph.hpp"
#include "recallnet/rng.hpp"
#include "recallnet/similarity.hpp"

namespace recallnet {

enum class ThetaRule { kFixed, kPercentile75OfInitial };
enum class CandidateRule { kAllNonEdges, kTopMPerNode };

// Config spellings: fixed | percentile75, all | top_m.
std::string_view to_string(ThetaRule rule);
ThetaRule parse_theta_rule(std::string_view name);
std::string_view to_string(CandidateRule rule);
CandidateRule parse_candidate_rule(std::string_view name);

struct ReconnectPolicy {
  double rho = 0.1;
  double theta = 0.5;  // only read under ThetaRule::kFixed
  ThetaRule theta_rule = ThetaRule::kPercentile75OfInitial;
  CandidateRule candidate_rule = CandidateRule::kAllNonEdges;
  std::size_t m = 5;

  void validate() const;

  bool operator==(const ReconnectPolicy&) const = default;
};

// Nearest-rank percentile: the ceil(q * count)-th smallest value (q in (0, 1]).
double nearest_rank_percentile(std::vector<double> values, double q);

// Fixed: policy.theta. Percentile75OfInitial: nearest-rank 75th percentile
// of the strict upper triangle of `initial`. Throws on a matrix with no
// off-diagonal entries.
double compute_threshold(const SimilarityMatrix& initial, const ReconnectPolicy& policy);

// For each candidate non-edge (i, j) in ascending order with x(i, j) >
// threshold, draws once and adds the edge with probability rho at weight
// x(i, j), last_active = now. Existing edges are never touched. Returns the
// number of edges added.
std::size_t reconnect(WeightedGraph& g, const SimilarityMatrix& x, const ReconnectPolicy& policy,
                      double threshold, CounterRng& rng, TimeStep now);

}  // namespace recallnet

#endif  // RECALLNET_RECONNECT_HPP_
