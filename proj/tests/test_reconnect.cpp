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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "recallnet/errors.hpp"
#include "recallnet/reconnect.hpp"
#include "recallnet/rng.hpp"

using namespace recallnet;

namespace {

SimilarityMatrix constant_similarity(std::size_t n, double v) {
  SimilarityMatrix x(n, SimilarityMetric::kCosine);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) x.set(i, j, v);
  return x;
}

ReconnectPolicy with_rho(double rho) {
  ReconnectPolicy p;
  p.rho = rho;
  return p;
}

}  // namespace

TEST_CASE("nearest-rank percentile") {
  CHECK(nearest_rank_percentile({0.4, 0.1, 0.3, 0.2}, 0.75) == 0.3);
  CHECK(nearest_rank_percentile({0.7, 0.7, 0.7}, 0.75) == 0.7);
  CHECK(nearest_rank_percentile({5.0}, 0.75) == 5.0);
  // ceil(0.75 * 8) = 6th smallest.
  CHECK(nearest_rank_percentile({8, 7, 6, 5, 4, 3, 2, 1}, 0.75) == 6);
  CHECK_THROWS_AS(nearest_rank_percentile({}, 0.75), ValidationError);
}

TEST_CASE("threshold rules") {
  SimilarityMatrix x(3, SimilarityMetric::kCosine);
  x.set(0, 1, 0.1);
  x.set(0, 2, 0.2);
  x.set(1, 2, 0.9);
  ReconnectPolicy p;
  // ceil(0.75 * 3) = 3rd smallest.
  CHECK(compute_threshold(x, p) == 0.9);
  p.theta_rule = ThetaRule::kFixed;
  p.theta = 0.5;
  CHECK(compute_threshold(x, p) == 0.5);
  CHECK(compute_threshold(constant_similarity(6, 0.37), ReconnectPolicy{}) == 0.37);
}

TEST_CASE("rho zero leaves the graph unchanged") {
  std::mt19937_64 rng(1);
  WeightedGraph g = oracle::random_graph(20, 0.1, rng);
  const WeightedGraph before = g;
  CounterRng r(9, Stream::kReconnect);
  CHECK(reconnect(g, constant_similarity(20, 0.9), with_rho(0.0), 0.0, r, 4) == 0);
  CHECK(g == before);
}

TEST_CASE("rho one with zero threshold closes the triangle") {
  WeightedGraph g(3);
  SimilarityMatrix x(3, SimilarityMetric::kCosine);
  x.set(0, 1, 0.2);
  x.set(0, 2, 0.4);
  x.set(1, 2, 0.6);
  CounterRng r(1, Stream::kReconnect);
  CHECK(reconnect(g, x, with_rho(1.0), 0.0, r, 7) == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.weight(0, 1) == 0.2);
  CHECK(g.weight(0, 2) == 0.4);
  CHECK(g.weight(1, 2) == 0.6);
  CHECK(g.edge(1, 2)->last_active == 7);
}

TEST_CASE("threshold is strict") {
  WeightedGraph g(3);
  CounterRng r(1, Stream::kReconnect);
  CHECK(reconnect(g, constant_similarity(3, 0.5), with_rho(1.0), 0.5, r, 1) == 0);
  CHECK(r.draws() == 0);
}

TEST_CASE("added fraction follows the binomial law") {
  // C(142, 2) = 10011 qualifying candidates.
  constexpr std::size_t n = 142;
  WeightedGraph g(n);
  CounterRng r(2026, Stream::kReconnect);
  const std::size_t added = reconnect(g, constant_similarity(n, 0.9), with_rho(0.3), 0.5, r, 1);
  const double pairs = n * (n - 1) / 2.0;
  CHECK(r.draws() == static_cast<std::uint64_t>(pairs));
  const double share = static_cast<double>(added) / pairs;
  CHECK(std::fabs(share - 0.3) <= 3 * std::sqrt(0.3 * 0.7 / pairs));
}

TEST_CASE("reconnect properties on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = oracle::random_graph(25, 0.1, rng);
    SimilarityMatrix x(25, SimilarityMetric::kCosine);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (NodeId i = 0; i < 25; ++i)
      for (NodeId j = i + 1; j < 25; ++j) x.set(i, j, u(rng));
    ReconnectPolicy policy = with_rho(0.5);
    if (trial % 2) policy.candidate_rule = CandidateRule::kTopMPerNode;
    const WeightedGraph before = g;
    WeightedGraph again = g;
    CounterRng r1(trial, Stream::kReconnect);
    CounterRng r2(trial, Stream::kReconnect);
    reconnect(g, x, policy, 0.6, r1, 9);
    reconnect(again, x, policy, 0.6, r2, 9);
    CHECK(g == again);
    for (const auto& [e, s] : before.edges()) {
      REQUIRE(g.has_edge(e.u, e.v));
      CHECK(g.edge(e.u, e.v) == s);
    }
    for (const auto& [e, s] : g.edges()) {
      if (before.has_edge(e.u, e.v)) continue;
      CHECK(x(e.u, e.v) > 0.6);
      CHECK(s.weight == x(e.u, e.v));
      CHECK(s.last_active == 9);
    }
  }
}

TEST_CASE("top-m candidates stay within each endpoint's best m") {
  std::mt19937_64 rng(3);
  const std::size_t n = 30;
  WeightedGraph g(n);
  SimilarityMatrix x(n, SimilarityMetric::kCosine);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) x.set(i, j, u(rng));
  ReconnectPolicy policy = with_rho(1.0);
  policy.candidate_rule = CandidateRule::kTopMPerNode;
  policy.m = 2;
  CounterRng r(4, Stream::kReconnect);
  reconnect(g, x, policy, 0.0, r, 1);
  for (const auto& [e, s] : g.edges()) {
    auto rank_of = [&](NodeId a, NodeId b) {
      int better = 0;
      for (NodeId k = 0; k < n; ++k)
        if (k != a && x(a, k) > x(a, b)) ++better;
      return better;
    };
    CHECK((rank_of(e.u, e.v) < 2 || rank_of(e.v, e.u) < 2));
  }
  CHECK(g.edge_count() <= n * 2);
}

TEST_CASE("policy validation and names") {
  ReconnectPolicy p;
  p.rho = 1.2;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = ReconnectPolicy{};
  p.theta = -0.5;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  CHECK(parse_theta_rule("fixed") == ThetaRule::kFixed);
  CHECK(parse_candidate_rule(to_string(CandidateRule::kTopMPerNode)) == CandidateRule::kTopMPerNode);
}
