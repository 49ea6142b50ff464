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

#pragma once

#include <cstdint>
#include <random>

#include "blotto/game.hpp"

namespace blotto {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct GameDistribution {
  double budget_lo = 0.05;
  double budget_hi = 4.0;
  double value_lo = 0.2;
  double value_hi = 4.0;
};

// Independent generator for sample `index`, seeded with seed ^ index.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

// Uniform on [0, 1) from 53 random bits.
double unit_real(std::mt19937_64& rng);
double log_uniform(std::mt19937_64& rng, double lo, double hi);
// Uniform on (lo, hi].
double uniform_left_open(std::mt19937_64& rng, double lo, double hi);

GameInstance random_game(std::mt19937_64& rng,
                         const GameDistribution& dist = {});

}  // namespace blotto
