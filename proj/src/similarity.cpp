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

#include "recallnet/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

std::size_t count_common(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return common;
}

}  // namespace

std::string_view to_string(SimilarityMetric metric) {
  switch (metric) {
    case SimilarityMetric::kCosine: return "cosine";
    case SimilarityMetric::kJaccard: return "jaccard";
    case SimilarityMetric::kBaseline: return "baseline";
  }
  return "?";
}

SimilarityMetric parse_similarity_metric(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "cosine") return SimilarityMetric::kCosine;
  if (key == "jaccard") return SimilarityMetric::kJaccard;
  if (key == "baseline") return SimilarityMetric::kBaseline;
  throw ValidationError("similarity metric '" + std::string(name) +
                        "' not one of cosine | jaccard | baseline");
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, SimilarityMetric metric)
    : n_(n), metric_(metric), values_(n * n, 0.0) {}

void SimilarityMatrix::set(NodeId i, NodeId j, double value) {
  if (i >= n_ || j >= n_) throw ValidationError("similarity index out of range");
  if (i == j) throw ValidationError("similarity diagonal is fixed at 0");
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError("similarity value " + std::to_string(value) + " outside [0, 1]");
  }
  values_[i * n_ + j] = value;
  values_[j * n_ + i] = value;
}

std::vector<double> SimilarityMatrix::upper_triangle() const {
  std::vector<double> out;
  out.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back(values_[i * n_ + j]);
  return out;
}

double cosine_similarity(const WeightedGraph& g, NodeId i, NodeId j) {
  double dot = 0.0, norm_i = 0.0, norm_j = 0.0;
  for (NodeId k : g.neighbors(i)) {
    const double w = g.weight(i, k);
    norm_i += w * w;
  }
  for (NodeId k : g.neighbors(j)) {
    const double w = g.weight(j, k);
    norm_j += w * w;
    if (k != i) dot += w * g.weight(i, k);
  }
  if (norm_i == 0.0 || norm_j == 0.0) return 0.0;
  return clamp_unit(dot / (std::sqrt(norm_i) * std::sqrt(norm_j)));
}

double jaccard_similarity(const WeightedGraph& g, NodeId i, NodeId j) {
  const auto a = g.neighbors(i);
  const auto b = g.neighbors(j);
  const std::size_t common = count_common(a, b);
  const std::size_t united = a.size() + b.size() - common;
  if (united == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(united);
}

double baseline_similarity(const WeightedGraph& g, NodeId i, NodeId j) {
  const std::size_t n = g.node_count();
  if (n < 2) return 0.0;
  const double scale = static_cast<double>(n - 1);
  return clamp_unit(static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)) /
                    (scale * scale));
}

double pair_similarity(const WeightedGraph& g, SimilarityMetric metric, NodeId i, NodeId j) {
  switch (metric) {
    case SimilarityMetric::kCosine: return cosine_similarity(g, i, j);
    case SimilarityMetric::kJaccard: return jaccard_similarity(g, i, j);
    case SimilarityMetric::kBaseline: return baseline_similarity(g, i, j);
  }
  return 0.0;
}

SimilarityMatrix similarity_matrix(const WeightedGraph& g, SimilarityMetric metric) {
  const std::size_t n = g.node_count();
  SimilarityMatrix x(n, metric);
  if (n < 2) return x;

  if (metric == SimilarityMetric::kBaseline) {
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) x.set(i, j, baseline_similarity(g, i, j));
    return x;
  }

  // Weighted neighbor lists in ascending neighbor order.
  std::vector<std::vector<std::pair<NodeId, double>>> rows(n);
  for (NodeId v = 0; v < n; ++v) rows[v].reserve(g.degree(v));
  for (const auto& [e, s] : g.edges()) {
    rows[e.u].emplace_back(e.v, s.weight);
    rows[e.v].emplace_back(e.u, s.weight);
  }

  // shared[i * n + j] for i < j: sum over common neighbors v of w_iv * w_jv
  // (cosine) or the common-neighbor count (Jaccard).
  std::vector<double> shared(n * n, 0.0);
  const bool weighted = metric == SimilarityMetric::kCosine;
  for (NodeId v = 0; v < n; ++v) {
    const auto& row = rows[v];
    for (std::size_t a = 0; a < row.size(); ++a) {
      const auto [i, wi] = row[a];
      double* base = shared.data() + static_cast<std::size_t>(i) * n;
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        base[row[b].first] += weighted ? wi * row[b].second : 1.0;
      }
    }
  }

  if (weighted) {
    std::vector<double> norm(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
      double sq = 0.0;
      for (const auto& [k, w] : rows[v]) sq += w * w;
      norm[v] = std::sqrt(sq);
    }
    for (NodeId i = 0; i < n; ++i) {
      if (norm[i] == 0.0) continue;
      for (NodeId j = i + 1; j < n; ++j) {
        const double dot = shared[static_cast<std::size_t>(i) * n + j];
        if (dot == 0.0 || norm[j] == 0.0) continue;
        x.set(i, j, clamp_unit(dot / (norm[i] * norm[j])));
      }
    }
  } else {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const double common = shared[static_cast<std::size_t>(i) * n + j];
        const double united =
            static_cast<double>(g.degree(i) + g.degree(j)) - common;
        if (united > 0.0 && common > 0.0) x.set(i, j, common / united);
      }
    }
  }
  return x;
}

SimilarityMatrix attribute_similarity(std::span<const std::vector<double>> features) {
  const std::size_t n = features.size();
  SimilarityMatrix x(n, SimilarityMetric::kCosine);
  if (n == 0) return x;
  const std::size_t dim = features[0].size();
  for (const auto& row : features) {
    if (row.size() != dim) throw ValidationError("attribute rows differ in length");
  }
  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sq = 0.0;
    for (double f : features[i]) sq += f * f;
    norm[i] = std::sqrt(sq);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm[i] == 0.0 || norm[j] == 0.0) continue;
      double dot = 0.0;
      for (std::size_t f = 0; f < dim; ++f) dot += features[i][f] * features[j][f];
      x.set(static_cast<NodeId>(i), static_cast<NodeId>(j),
            clamp_unit(dot / (norm[i] * norm[j])));
    }
  }
  return x;
}

}  // namespace recallnet
