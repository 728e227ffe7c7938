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

#ifndef RECALLNET_HOMOPHILY_HPP_
#define RECALLNET_HOMOPHILY_HPP_

#include <string_view>
#include <vector>

#include "recallnet/bipartite.hpp"
#include "recallnet/decay.hpp"
#include "recallnet/similarity.hpp"

namespace recallnet {

// How mode-2 entities get the timestamps that drive the second-mode decay
// term. The incidence only records mode-1 observation times.
enum class SecondModeTiming {
  // t of a mode-2 entity = latest t_j among mode-1 agents incident to it
  // (0 when it has none).
  kLatestNeighbor,
  // No timestamps: the decay term is 1 for every pair.
  kIgnore,
};

std::string_view to_string(SecondModeTiming timing);
SecondModeTiming parse_second_mode_timing(std::string_view name);

std::vector<double> second_mode_timestamps(const BipartiteIncidence& b, SecondModeTiming timing);

// sum over ordered pairs i != k of mode-1 agents, and all mode-2 j, of
// N_ij N_kj X_ik g(|t_i - t_k|, R_i). R_i is agent i's retention.
double first_mode_homophily(const BipartiteIncidence& b, const SimilarityMatrix& x,
                            const DecaySpec& spec);

// The same sum over ordered pairs of mode-2 entities through shared mode-1
// agents: N_ji N_jk X_ik g(|t_i - t_k|, R_i), with t from `timing`.
double second_mode_homophily(const BipartiteIncidence& b, const SimilarityMatrix& x,
                             const DecaySpec& spec,
                             SecondModeTiming timing = SecondModeTiming::kLatestNeighbor);

}  // namespace recallnet

#endif  // RECALLNET_HOMOPHILY_HPP_
