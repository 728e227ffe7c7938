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

#include "recallnet/generators.hpp"

#include <string>

#include "recallnet/errors.hpp"
#include "recallnet/rng.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

void check_probability(double p, const char* field) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string("topology.") + field + " = " + std::to_string(p) +
                          " out of range [0, 1]");
  }
}

}  // namespace

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kSparseER: return "sparse_er";
    case TopologyKind::kConvex: return "convex";
    case TopologyKind::kModularSBM: return "modular_sbm";
  }
  return "?";
}

TopologyKind parse_topology_kind(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "sparse_er" || key == "sparse" || key == "er") return TopologyKind::kSparseER;
  if (key == "convex" || key == "complete") return TopologyKind::kConvex;
  if (key == "modular_sbm" || key == "modular" || key == "sbm") return TopologyKind::kModularSBM;
  throw ValidationError("topology.kind = '" + std::string(name) +
                        "' not one of sparse_er | convex | modular_sbm");
}

void TopologySpec::validate() const {
  if (n == 0) throw ValidationError("topology.n must be >= 1");
  check_probability(er_p, "er_p");
  check_probability(sbm_p_in, "sbm_p_in");
  check_probability(sbm_p_out, "sbm_p_out");
  if (kind == TopologyKind::kModularSBM) {
    if (sbm_blocks == 0) throw ValidationError("topology.sbm_blocks must be >= 1");
    if (n % sbm_blocks != 0) {
      throw ValidationError("topology.n = " + std::to_string(n) +
                            " not divisible by topology.sbm_blocks = " +
                            std::to_string(sbm_blocks));
    }
  }
}

std::size_t sbm_block_of(const TopologySpec& spec, NodeId i) {
  return i / (spec.n / spec.sbm_blocks);
}

WeightedGraph generate(const TopologySpec& spec) {
  spec.validate();
  WeightedGraph g(spec.n);
  const auto n = static_cast<NodeId>(spec.n);
  if (spec.kind == TopologyKind::kConvex) {
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j, 1.0, 0);
    return g;
  }
  CounterRng rng(spec.seed, Stream::kGeneration);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      double p = spec.er_p;
      if (spec.kind == TopologyKind::kModularSBM) {
        p = sbm_block_of(spec, i) == sbm_block_of(spec, j) ? spec.sbm_p_in : spec.sbm_p_out;
      }
      if (rng.bernoulli(p)) g.add_edge(i, j, 1.0, 0);
    }
  }
  return g;
}

}  // namespace recallnet
