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

#ifndef RECALLNET_SIMILARITY_HPP_
#define RECALLNET_SIMILARITY_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "recallnet/graph.hpp"

namespace recallnet {

enum class SimilarityMetric { kCosine, kJaccard, kBaseline };

// Config spellings: cosine | jaccard | baseline (case-insensitive).
std::string_view to_string(SimilarityMetric metric);
SimilarityMetric parse_similarity_metric(std::string_view name);

// Dense symmetric n x n matrix with zero diagonal and entries in [0, 1].
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::size_t n, SimilarityMetric metric);

  std::size_t size() const { return n_; }
  SimilarityMetric metric() const { return metric_; }

  double operator()(NodeId i, NodeId j) const { return values_[i * n_ + j]; }
  // Writes both (i, j) and (j, i). Diagonal writes and values outside
  // [0, 1] throw.
  void set(NodeId i, NodeId j, double value);

  // Off-diagonal upper-triangle values in (i, j) order.
  std::vector<double> upper_triangle() const;

 private:
  std::size_t n_;
  SimilarityMetric metric_;
  std::vector<double> values_;
};

// Cosine of weighted adjacency rows; 0 if either row is all zero.
double cosine_similarity(const WeightedGraph& g, NodeId i, NodeId j);
// |N(i) & N(j)| / |N(i) | N(j)| over open neighborhoods; 0 on an empty union.
double jaccard_similarity(const WeightedGraph& g, NodeId i, NodeId j);
// deg(i) deg(j) / (n - 1)^2.
double baseline_similarity(const WeightedGraph& g, NodeId i, NodeId j);

double pair_similarity(const WeightedGraph& g, SimilarityMetric metric, NodeId i, NodeId j);

// All pairs at once. Accumulates shared-neighbor products node by node, so
// the cost is O(sum of squared degrees + n^2) rather than n^2 row scans.
SimilarityMatrix similarity_matrix(const WeightedGraph& g, SimilarityMetric metric);

// Alternative X source: cosine between per-node attribute vectors, with
// negative cosines floored at 0. All rows must have equal length.
SimilarityMatrix attribute_similarity(std::span<const std::vector<double>> features);

}  // namespace recallnet

#endif  // RECALLNET_SIMILARITY_HPP_
