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

#ifndef RECALLNET_BIPARTITE_HPP_
#define RECALLNET_BIPARTITE_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace recallnet {

// Two-mode incidence N (mode-1 agents x mode-2 entities) with a last
// observation time per mode-1 agent. Missing entries are zero.
class BipartiteIncidence {
 public:
  BipartiteIncidence(std::size_t mode1_count, std::size_t mode2_count);

  std::size_t mode1_count() const { return mode1_count_; }
  std::size_t mode2_count() const { return mode2_count_; }

  // Setting 0 erases the entry. Negative or non-finite values throw.
  void set(std::size_t i, std::size_t j, double value);
  double get(std::size_t i, std::size_t j) const;

  void set_timestamp(std::size_t i, double t);
  double timestamp(std::size_t i) const { return timestamps_.at(i); }
  const std::vector<double>& timestamps() const { return timestamps_; }

  const std::map<std::pair<std::size_t, std::size_t>, double>& entries() const { return entries_; }

  // Mode-2 x mode-1 view. The transposed timestamps must be supplied since
  // this type only carries mode-1 times.
  BipartiteIncidence transposed(std::vector<double> mode2_timestamps) const;

 private:
  std::size_t mode1_count_;
  std::size_t mode2_count_;
  std::map<std::pair<std::size_t, std::size_t>, double> entries_;
  std::vector<double> timestamps_;
};

// Reads lines `i j value t_i`; '#' starts a comment. Dimensions are
// 1 + the largest index seen in each mode. A later line for the same
// agent overwrites its timestamp.
BipartiteIncidence read_bipartite_edges(std::istream& in);

}  // namespace recallnet

#endif  // RECALLNET_BIPARTITE_HPP_
