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

#include "recallnet/rng.hpp"

namespace recallnet {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = mix64(base ^ 0x6a09e667f3bcc908ull);
  for (std::uint64_t p : parts) h = mix64(h + kGamma + mix64(p));
  return h;
}

CounterRng::CounterRng(std::uint64_t seed, Stream stream)
    : key_(derive_seed(seed, {static_cast<std::uint64_t>(stream)})) {}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

}  // namespace recallnet
