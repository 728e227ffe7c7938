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

#include "doctest.h"
#include "recallnet/errors.hpp"
#include "recallnet/generators.hpp"
#include "recallnet/rng.hpp"

using namespace recallnet;

namespace {

struct Moments {
  double sum = 0;
  void add(double x) { sum += x; }
  double mean(std::size_t n) const { return sum / static_cast<double>(n); }
};

// Standard error of the mean of a Binomial(pairs, p) count over `samples`.
double binomial_se(double pairs, double p, std::size_t samples) {
  return std::sqrt(pairs * p * (1 - p) / static_cast<double>(samples));
}

}  // namespace

TEST_CASE("convex topology is the complete graph") {
  TopologySpec spec;
  spec.kind = TopologyKind::kConvex;
  WeightedGraph g = generate(spec);
  CHECK(g.edge_count() == 19900);
  for (const auto& [e, s] : g.edges()) {
    CHECK(s.weight == 1.0);
    CHECK(s.last_active == 0);
  }
}

TEST_CASE("sparse ER edge count over 1000 seeds") {
  constexpr std::size_t kSeeds = 1000;
  TopologySpec spec;
  Moments edges;
  Moments degree;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    spec.seed = derive_seed(42, {s});
    WeightedGraph g = generate(spec);
    edges.add(static_cast<double>(g.edge_count()));
    degree.add(2.0 * static_cast<double>(g.edge_count()) / 200.0);
  }
  const double pairs = 200.0 * 199.0 / 2.0;
  const double expected = pairs * 0.02;
  CHECK(expected == doctest::Approx(398.0));
  CHECK(std::fabs(edges.mean(kSeeds) - expected) <= 3 * binomial_se(pairs, 0.02, kSeeds));
  CHECK(degree.mean(kSeeds) == doctest::Approx(3.98).epsilon(0.01));
}

TEST_CASE("modular SBM intra and inter block counts over 1000 seeds") {
  constexpr std::size_t kSeeds = 1000;
  TopologySpec spec;
  spec.kind = TopologyKind::kModularSBM;
  // Block pair counts from first principles: n/B nodes per block.
  const double per_block = 200.0 / 4.0;
  const double intra_pairs = 4.0 * per_block * (per_block - 1) / 2.0;
  const double inter_pairs = 200.0 * 199.0 / 2.0 - intra_pairs;
  Moments intra;
  Moments inter;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    spec.seed = derive_seed(7, {s});
    WeightedGraph g = generate(spec);
    double in = 0;
    for (const auto& [e, st] : g.edges()) in += (e.u / 50 == e.v / 50) ? 1 : 0;
    intra.add(in);
    inter.add(static_cast<double>(g.edge_count()) - in);
  }
  CHECK(intra_pairs * 0.25 == doctest::Approx(1225.0));
  CHECK(std::fabs(intra.mean(kSeeds) - intra_pairs * 0.25) <=
        3 * binomial_se(intra_pairs, 0.25, kSeeds));
  CHECK(std::fabs(inter.mean(kSeeds) - inter_pairs * 0.01) <=
        3 * binomial_se(inter_pairs, 0.01, kSeeds));
  // Cross-block share is far below within-block share.
  CHECK(inter.mean(kSeeds) / inter_pairs < 0.1 * intra.mean(kSeeds) / intra_pairs);
}

TEST_CASE("block assignment is contiguous") {
  TopologySpec spec;
  spec.kind = TopologyKind::kModularSBM;
  CHECK(sbm_block_of(spec, 0) == 0);
  CHECK(sbm_block_of(spec, 49) == 0);
  CHECK(sbm_block_of(spec, 50) == 1);
  CHECK(sbm_block_of(spec, 199) == 3);
}

TEST_CASE("same seed gives identical graph") {
  TopologySpec spec;
  spec.kind = TopologyKind::kModularSBM;
  spec.seed = 123;
  WeightedGraph a = generate(spec);
  WeightedGraph b = generate(spec);
  CHECK(a == b);
  CHECK(snapshot_hash(a, 0) == snapshot_hash(b, 0));
  spec.seed = 124;
  CHECK(snapshot_hash(generate(spec), 0) != snapshot_hash(a, 0));
}

TEST_CASE("topology validation") {
  TopologySpec spec;
  spec.er_p = 1.5;
  CHECK_THROWS_AS(generate(spec), ValidationError);
  spec = TopologySpec{};
  spec.kind = TopologyKind::kModularSBM;
  spec.n = 201;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  CHECK(parse_topology_kind("modular_sbm") == TopologyKind::kModularSBM);
  CHECK(to_string(TopologyKind::kSparseER) == "sparse_er");
  CHECK_THROWS_AS(parse_topology_kind("ring"), ValidationError);
}

TEST_CASE("rng streams are independent and reproducible") {
  CounterRng a(5, Stream::kAdversary);
  CounterRng b(5, Stream::kAdversary);
  CounterRng c(5, Stream::kReconnect);
  int same_stream = 0;
  int cross_stream = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    same_stream += x == b.next_u64();
    cross_stream += x == c.next_u64();
  }
  CHECK(same_stream == 1000);
  CHECK(cross_stream == 0);
  CHECK(a.draws() == 1000);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = a.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // Uniform mean 0.5 with SE sqrt(1/12/1e5) ~ 9.1e-4.
  CHECK(std::fabs(sum / 100000 - 0.5) < 4 * 9.2e-4);
}
