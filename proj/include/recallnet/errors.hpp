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

#ifndef RECALLNET_ERRORS_HPP_
#define RECALLNET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace recallnet {

// Bad input: out-of-range parameters, malformed graphs, config errors.
// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A metric whose value is mathematically undefined for the given input
// (e.g. path length of a single-node component, VoR with a flat envelope).
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// File system failures. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace recallnet

#endif  // RECALLNET_ERRORS_HPP_
