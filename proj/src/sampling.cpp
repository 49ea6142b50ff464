// Copyright 2026 The Blotto Transfers Authors
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

#include "blotto/sampling.hpp"

#include <cmath>

namespace blotto {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(seed ^ index);
}

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  const double a = std::log(lo), b = std::log(hi);
  return std::exp(a + unit_real(rng) * (b - a));
}

double uniform_left_open(std::mt19937_64& rng, double lo, double hi) {
  return hi - unit_real(rng) * (hi - lo);
}

GameInstance random_game(std::mt19937_64& rng, const GameDistribution& dist) {
  GameInstance g;
  g.phi1 = log_uniform(rng, dist.value_lo, dist.value_hi);
  g.phi2 = log_uniform(rng, dist.value_lo, dist.value_hi);
  g.x1 = log_uniform(rng, dist.budget_lo, dist.budget_hi);
  g.x2 = log_uniform(rng, dist.budget_lo, dist.budget_hi);
  return g;
}

}  // namespace blotto
