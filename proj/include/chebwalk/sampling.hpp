// Copyright 2026 The chebwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace chebwalk {

/// Seed used when neither --seed nor CHEBWALK_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20230117;
inline constexpr std::uint64_t kDefaultShots = 100000;

/// SplitMix64 finalizer; used to derive child seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seeded measurement-outcome sampler. Child streams obtained through
/// split() are reproducible and independent of how many draws the parent
/// has made.
class ShotSampler {
public:
  explicit ShotSampler(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  ShotSampler split(std::uint64_t stream) const;

  /// Number of "0" outcomes in `trials` runs of a circuit whose "0" outcome
  /// has probability p (clamped to [0, 1]).
  std::uint64_t binomial(std::uint64_t trials, double p);

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Shots needed for a 3-sigma half-width of `delta` on an overlap in
/// [-1, 1]: ceil((3 / delta)^2).
std::uint64_t shots_for_accuracy(double delta);

} // namespace chebwalk
