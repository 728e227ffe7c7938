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

#include "recallnet/homophily.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

// Core of both statistics. `lists[j]` holds (member, value) for every
// member incident to hub j; members are the side whose pairs are summed.
double pair_sum(const std::vector<std::vector<std::pair<std::size_t, double>>>& lists,
                std::size_t members, const SimilarityMatrix& x, const DecaySpec& spec,
                const std::vector<double>& times) {
  // co[i * members + k] = sum_j N(i, j) N(k, j) over hubs j, for i != k.
  std::vector<double> co(members * members, 0.0);
  for (const auto& list : lists) {
    for (const auto& [i, ni] : list) {
      for (const auto& [k, nk] : list) {
        if (i != k) co[i * members + k] += ni * nk;
      }
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < members; ++i) {
    for (std::size_t k = 0; k < members; ++k) {
      const double c = co[i * members + k];
      if (c == 0.0) continue;
      const double f = recall_modulated_similarity(
          x(static_cast<NodeId>(i), static_cast<NodeId>(k)), spec, times[i], times[k],
          static_cast<NodeId>(i));
      total += c * f;
    }
  }
  return total;
}

void check_dimension(const SimilarityMatrix& x, std::size_t expected, const char* which) {
  if (x.size() != expected) {
    throw ValidationError(std::string(which) + ": similarity matrix is " +
                          std::to_string(x.size()) + "x" + std::to_string(x.size()) +
                          ", expected " + std::to_string(expected));
  }
}

}  // namespace

std::string_view to_string(SecondModeTiming timing) {
  return timing == SecondModeTiming::kIgnore ? "ignore" : "latest_neighbor";
}

SecondModeTiming parse_second_mode_timing(std::string_view name) {
  const std::string key = internal::lower(name);
  if (key == "latest_neighbor") return SecondModeTiming::kLatestNeighbor;
  if (key == "ignore") return SecondModeTiming::kIgnore;
  throw ValidationError("second-mode timing '" + std::string(name) +
                        "' not one of latest_neighbor | ignore");
}

std::vector<double> second_mode_timestamps(const BipartiteIncidence& b, SecondModeTiming timing) {
  std::vector<double> times(b.mode2_count(), 0.0);
  if (timing == SecondModeTiming::kIgnore) return times;
  for (const auto& [key, value] : b.entries()) {
    times[key.second] = std::max(times[key.second], b.timestamp(key.first));
  }
  return times;
}

double first_mode_homophily(const BipartiteIncidence& b, const SimilarityMatrix& x,
                            const DecaySpec& spec) {
  check_dimension(x, b.mode1_count(), "first_mode_homophily");
  std::vector<std::vector<std::pair<std::size_t, double>>> by_entity(b.mode2_count());
  for (const auto& [key, value] : b.entries()) by_entity[key.second].emplace_back(key.first, value);
  return pair_sum(by_entity, b.mode1_count(), x, spec, b.timestamps());
}

double second_mode_homophily(const BipartiteIncidence& b, const SimilarityMatrix& x,
                             const DecaySpec& spec, SecondModeTiming timing) {
  check_dimension(x, b.mode2_count(), "second_mode_homophily");
  std::vector<std::vector<std::pair<std::size_t, double>>> by_agent(b.mode1_count());
  for (const auto& [key, value] : b.entries()) by_agent[key.first].emplace_back(key.second, value);
  return pair_sum(by_agent, b.mode2_count(), x, spec, second_mode_timestamps(b, timing));
}

}  // namespace recallnet
