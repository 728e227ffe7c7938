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

#include "recallnet/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <tuple>

#include "recallnet/errors.hpp"

namespace recallnet {

BipartiteIncidence::BipartiteIncidence(std::size_t mode1_count, std::size_t mode2_count)
    : mode1_count_(mode1_count), mode2_count_(mode2_count), timestamps_(mode1_count, 0.0) {
  if (mode1_count == 0 || mode2_count == 0) {
    throw ValidationError("bipartite incidence needs at least one node in each mode");
  }
}

void BipartiteIncidence::set(std::size_t i, std::size_t j, double value) {
  if (i >= mode1_count_ || j >= mode2_count_) {
    throw ValidationError("incidence index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range");
  }
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ValidationError("incidence values must be finite and >= 0");
  }
  if (value == 0.0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

double BipartiteIncidence::get(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0.0 : it->second;
}

void BipartiteIncidence::set_timestamp(std::size_t i, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("timestamps must be finite and >= 0");
  timestamps_.at(i) = t;
}

BipartiteIncidence BipartiteIncidence::transposed(std::vector<double> mode2_timestamps) const {
  if (mode2_timestamps.size() != mode2_count_) {
    throw ValidationError("transposed(): need one timestamp per mode-2 node");
  }
  BipartiteIncidence t(mode2_count_, mode1_count_);
  for (const auto& [key, value] : entries_) t.set(key.second, key.first, value);
  for (std::size_t j = 0; j < mode2_count_; ++j) t.set_timestamp(j, mode2_timestamps[j]);
  return t;
}

BipartiteIncidence read_bipartite_edges(std::istream& in) {
  std::vector<std::tuple<std::size_t, std::size_t, double, double>> rows;
  std::size_t max_i = 0, max_j = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    long long i = -1, j = -1;
    double value = 0.0, t = 0.0;
    std::string extra;
    if (!(fields >> i >> j >> value >> t) || (fields >> extra) || i < 0 || j < 0) {
      throw ValidationError("bipartite edge list: malformed line " + std::to_string(line_no) +
                            " (expected `i j value t_i`)");
    }
    rows.emplace_back(i, j, value, t);
    max_i = std::max<std::size_t>(max_i, i);
    max_j = std::max<std::size_t>(max_j, j);
  }
  if (rows.empty()) throw ValidationError("bipartite edge list is empty");
  BipartiteIncidence b(max_i + 1, max_j + 1);
  for (const auto& [i, j, value, t] : rows) {
    b.set(i, j, value);
    b.set_timestamp(i, t);
  }
  return b;
}

}  // namespace recallnet
