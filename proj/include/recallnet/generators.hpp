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

#ifndef RECALLNET_GENERATORS_HPP_
#define RECALLNET_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "recallnet/graph.hpp"

namespace recallnet {

enum class TopologyKind { kSparseER, kConvex, kModularSBM };

// Config spellings: sparse_er | convex | modular_sbm (case-insensitive).
std::string_view to_string(TopologyKind kind);
TopologyKind parse_topology_kind(std::string_view name);

struct TopologySpec {
  TopologyKind kind = TopologyKind::kSparseER;
  std::size_t n = 200;
  double er_p = 0.02;
  std::size_t sbm_blocks = 4;
  double sbm_p_in = 0.25;
  double sbm_p_out = 0.01;
  std::uint64_t seed = 0;

  // Throws ValidationError naming the offending field.
  void validate() const;

  bool operator==(const TopologySpec&) const = default;
};

// Block index of node `i` in the equal-size SBM partition.
std::size_t sbm_block_of(const TopologySpec& spec, NodeId i);

// Builds the topology with unit weights and last_active = 0. Pairs are
// visited in ascending (i, j) order with one Bernoulli draw each, so the
// output is a pure function of the spec.
WeightedGraph generate(const TopologySpec& spec);

}  // namespace recallnet

#endif  // RECALLNET_GENERATORS_HPP_
