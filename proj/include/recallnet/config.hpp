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

#ifndef RECALLNET_CONFIG_HPP_
#define RECALLNET_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "recallnet/engine.hpp"

namespace recallnet {

// Sectioned key/value experiment file:
//
//   [topology]
//   kind = sparse_er        # required
//   n = 200
//   [decay]
//   delta = 0.8
//   [sweep]
//   delta = 0.6, 0.7, 0.8, 0.9
//
// `section.key = value` lines outside a section header are accepted too.
// '#' and ';' start comments. Every key not given takes its default.
// Unknown keys, malformed values and out-of-range values raise
// ValidationError naming the key.
ExperimentConfig parse_config_text(std::string_view text);

// Throws IoError when the file cannot be read.
ExperimentConfig parse_config(const std::filesystem::path& path);

// Canonical text form; parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace recallnet

#endif  // RECALLNET_CONFIG_HPP_
