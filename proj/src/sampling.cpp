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
#include "chebwalk/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "chebwalk/error.hpp"

namespace chebwalk {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ShotSampler::ShotSampler(std::uint64_t seed)
    : seed_(seed), engine_(mix_seed(seed)) {}

ShotSampler ShotSampler::split(std::uint64_t stream) const {
  return ShotSampler(mix_seed(seed_ ^ mix_seed(stream + 1)));
}

std::uint64_t ShotSampler::binomial(std::uint64_t trials, double p) {
  if (trials == 0) {
    return 0;
  }
  const double q = std::clamp(p, 0.0, 1.0);
  if (q == 0.0) {
    return 0;
  }
  if (q == 1.0) {
    return trials;
  }
  std::binomial_distribution<std::uint64_t> dist(trials, q);
  return dist(engine_);
}

std::uint64_t shots_for_accuracy(double delta) {
  if (!(delta > 0.0)) {
    throw ValidationError("target accuracy must be positive");
  }
  return static_cast<std::uint64_t>(std::ceil((3.0 / delta) * (3.0 / delta)));
}

} // namespace chebwalk
