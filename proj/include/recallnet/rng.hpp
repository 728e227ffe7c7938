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

#ifndef RECALLNET_RNG_HPP_
#define RECALLNET_RNG_HPP_

#include <cstdint>
#include <initializer_list>

namespace recallnet {

// Independent substreams of one run seed. Switching a stage on or off
// never shifts the draws of another stage.
enum class Stream : std::uint64_t {
  kGeneration = 1,
  kAdversary = 2,
  kReconnect = 3,
};

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Folds a list of integers into one seed. Order matters.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

// Counter-based generator: draw n of stream s is mix64(key(seed, s) + n*gamma).
// The state is just (key, counter), so results do not depend on the
// standard library's distribution implementations.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, Stream stream);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace recallnet

#endif  // RECALLNET_RNG_HPP_
