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

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "recallnet/decay.hpp"
#include "recallnet/errors.hpp"
#include "recallnet/homophily.hpp"

using namespace recallnet;

namespace {

struct Instance {
  BipartiteIncidence b{1, 1};
  SimilarityMatrix x1{1, SimilarityMetric::kCosine};
  SimilarityMatrix x2{1, SimilarityMetric::kCosine};
  DecaySpec spec;
  std::vector<double> r1;  // retention per mode-1 node
  std::vector<double> r2;  // retention per mode-2 node
};

SimilarityMatrix random_similarity(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SimilarityMatrix x(n, SimilarityMetric::kCosine);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) x.set(i, j, u(rng));
  return x;
}

Instance random_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t m1 = 1 + rng() % 8;
  const std::size_t m2 = 1 + rng() % 8;
  Instance in;
  in.b = BipartiteIncidence(m1, m2);
  for (std::size_t i = 0; i < m1; ++i) {
    in.b.set_timestamp(i, static_cast<double>(rng() % 12));
    for (std::size_t j = 0; j < m2; ++j)
      if (u(rng) < 0.5) in.b.set(i, j, 0.1 + 2.0 * u(rng));
  }
  in.x1 = random_similarity(m1, rng);
  in.x2 = random_similarity(m2, rng);
  const double delta = 0.05 + 0.95 * u(rng);
  in.spec = DecaySpec::exponential(delta);
  in.r1.assign(m1, delta);
  in.r2.assign(m2, delta);
  if (rng() % 2 == 0) {
    const NodeId node = static_cast<NodeId>(rng() % std::max(m1, m2));
    const double over = 0.05 + 0.95 * u(rng);
    in.spec.set_node_delta(node, over);
    if (node < m1) in.r1[node] = over;
    if (node < m2) in.r2[node] = over;
  }
  return in;
}

// Latest timestamp among each mode-2 node's mode-1 neighbors, by scanning
// the dense incidence.
std::vector<double> latest_neighbor_times(const BipartiteIncidence& b) {
  std::vector<double> t(b.mode2_count(), 0.0);
  for (std::size_t j = 0; j < b.mode2_count(); ++j)
    for (std::size_t i = 0; i < b.mode1_count(); ++i)
      if (b.get(i, j) != 0.0) t[j] = std::max(t[j], b.timestamp(i));
  return t;
}

}  // namespace

TEST_CASE("all-zero incidence gives zero") {
  BipartiteIncidence b(4, 3);
  CHECK(first_mode_homophily(b, SimilarityMatrix(4, SimilarityMetric::kCosine),
                             DecaySpec::exponential(0.8)) == 0.0);
  CHECK(second_mode_homophily(b, SimilarityMatrix(3, SimilarityMetric::kCosine),
                              DecaySpec::exponential(0.8)) == 0.0);
}

TEST_CASE("two agents sharing one entity") {
  BipartiteIncidence b(2, 1);
  b.set(0, 0, 1.0);
  b.set(1, 0, 1.0);
  SimilarityMatrix x(2, SimilarityMetric::kCosine);
  x.set(0, 1, 0.5);
  CHECK(first_mode_homophily(b, x, DecaySpec::exponential(0.8)) == doctest::Approx(1.0));
  // Two steps apart with delta 0.8 scales both ordered contributions.
  b.set_timestamp(1, 2.0);
  CHECK(first_mode_homophily(b, x, DecaySpec::exponential(0.8)) ==
        doctest::Approx(2 * 0.5 * 0.64));
}

TEST_CASE("first and second mode match the loop oracle on 100 instances") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    Instance in = random_instance(rng);
    const double h1 = first_mode_homophily(in.b, in.x1, in.spec);
    const double o1 = oracle::first_mode(in.b, in.x1, in.r1, in.b.timestamps());
    CHECK(std::fabs(h1 - o1) <= 1e-12 * std::max(1.0, std::fabs(o1)));

    const double h2 = second_mode_homophily(in.b, in.x2, in.spec);
    const double o2 = oracle::second_mode(in.b, in.x2, in.r2, latest_neighbor_times(in.b));
    CHECK(std::fabs(h2 - o2) <= 1e-12 * std::max(1.0, std::fabs(o2)));

    const double h2i = second_mode_homophily(in.b, in.x2, in.spec, SecondModeTiming::kIgnore);
    const double o2i = oracle::second_mode(in.b, in.x2, in.r2,
                                           std::vector<double>(in.b.mode2_count(), 0.0));
    CHECK(std::fabs(h2i - o2i) <= 1e-12 * std::max(1.0, std::fabs(o2i)));

    CHECK(h1 >= 0.0);
    CHECK(h2 >= 0.0);
  }
}

TEST_CASE("second mode equals first mode of the transpose") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    Instance in = random_instance(rng);
    auto t = in.b.transposed(latest_neighbor_times(in.b));
    CHECK(second_mode_homophily(in.b, in.x2, in.spec) ==
          doctest::Approx(first_mode_homophily(t, in.x2, in.spec)).epsilon(1e-12));
  }
}

TEST_CASE("perfect recall with unit similarity is the off-diagonal of B^T B") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Instance in = random_instance(rng);
    const std::size_t m2 = in.b.mode2_count();
    SimilarityMatrix ones(m2, SimilarityMetric::kCosine);
    for (NodeId i = 0; i < m2; ++i)
      for (NodeId k = i + 1; k < m2; ++k) ones.set(i, k, 1.0);
    double expected = 0;
    for (std::size_t i = 0; i < m2; ++i)
      for (std::size_t k = 0; k < m2; ++k) {
        if (i == k) continue;
        double btb = 0;
        for (std::size_t j = 0; j < in.b.mode1_count(); ++j) btb += in.b.get(j, i) * in.b.get(j, k);
        expected += btb;
      }
    CHECK(second_mode_homophily(in.b, ones, DecaySpec::exponential(1.0)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("perfect recall ignores timestamps") {
  std::mt19937_64 rng(21);
  Instance in = random_instance(rng);
  BipartiteIncidence flat = in.b;
  for (std::size_t i = 0; i < flat.mode1_count(); ++i) flat.set_timestamp(i, 0.0);
  const auto one = DecaySpec::exponential(1.0);
  CHECK(first_mode_homophily(in.b, in.x1, one) == first_mode_homophily(flat, in.x1, one));
}

TEST_CASE("scaling incidence by c scales both statistics by c squared") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Instance in = random_instance(rng);
    BipartiteIncidence scaled = in.b;
    for (const auto& [key, v] : in.b.entries()) scaled.set(key.first, key.second, 3.0 * v);
    CHECK(first_mode_homophily(scaled, in.x1, in.spec) ==
          doctest::Approx(9.0 * first_mode_homophily(in.b, in.x1, in.spec)).epsilon(1e-12));
    CHECK(second_mode_homophily(scaled, in.x2, in.spec) ==
          doctest::Approx(9.0 * second_mode_homophily(in.b, in.x2, in.spec)).epsilon(1e-12));
  }
}

TEST_CASE("dimension mismatch is rejected") {
  BipartiteIncidence b(3, 2);
  CHECK_THROWS_AS(first_mode_homophily(b, SimilarityMatrix(2, SimilarityMetric::kCosine),
                                       DecaySpec::exponential(0.8)),
                  ValidationError);
  CHECK_THROWS_AS(b.set(0, 0, -1.0), ValidationError);
}

TEST_CASE("bipartite edge list reader") {
  std::istringstream in("# agent entity value t\n0 1 2.5 3\n2 0 1 7\n");
  auto b = read_bipartite_edges(in);
  CHECK(b.mode1_count() == 3);
  CHECK(b.mode2_count() == 2);
  CHECK(b.get(0, 1) == 2.5);
  CHECK(b.timestamp(2) == 7.0);
  std::istringstream bad("0 1 x 3\n");
  CHECK_THROWS_AS(read_bipartite_edges(bad), ValidationError);
}
