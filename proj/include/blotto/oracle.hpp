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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/payoffs.hpp"
#include "blotto/transfers.hpp"

namespace blotto {

// Maximal runs of consecutive grid points where both payoff deltas are > 0.
struct FeasibleIntervals {
  struct Run {
    double first = 0;  // first qualifying grid point
    double last = 0;   // last qualifying grid point
  };

  std::vector<Run> runs;
  double grid_step = 0;
  double domain_lo = 0;
  double domain_hi = 0;

  bool empty() const { return runs.empty(); }
  // Run i widened by half a step on each side, clipped to the domain.
  Interval interval(std::size_t i) const;
  std::vector<Interval> intervals() const;
};

// The grid is the open domain shrunk by one step at each end:
// step = width / (n + 1), points lo + k * step for k = 1..n.
// Requires n >= 1001 (throws std::invalid_argument otherwise).
FeasibleIntervals search_valuation(const GameInstance& g, std::size_t n);
FeasibleIntervals search_budget(const GameInstance& g, std::size_t n);

struct JointHit {
  TransferPair transfer;
  PayoffDeltas deltas;
};

// Grid search over (-x1, x2) x (-phi2, phi1); returns the grid point that
// maximizes min(delta1, delta2) among those where both are positive. Grid
// sizes must be >= 101.
std::optional<JointHit> search_joint(const GameInstance& g, std::size_t n_b,
                                     std::size_t n_v);

struct AgreementOptions {
  std::size_t valuation_grid = 20001;
  std::size_t budget_grid = 2001;
  // Games whose in_gv margin is below this are counted as excluded.
  double exclusion_margin = 1e-3;
  bool check_budget = true;
  bool check_joint = true;
};

struct Disagreement {
  std::size_t index = 0;
  std::string predicate;
  GameInstance game;
  bool predicate_verdict = false;
  bool oracle_verdict = false;
};

struct AgreementReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t excluded = 0;
  std::size_t gv_agree = 0;
  std::size_t gv_disagree = 0;
  std::size_t gb_agree = 0;
  std::size_t gb_disagree = 0;
  std::size_t joint_agree = 0;
  std::size_t joint_disagree = 0;
  std::size_t direction_violations = 0;
  std::vector<Disagreement> disagreements;

  std::string to_json() const;
};

// Draws `samples` games from the default distribution (sample_rng(seed, i)),
// then compares in_gv to search_valuation, in_gb to search_budget, and the
// joint verdict to a short step along the returned direction. Also counts
// oracle-found valuation transfers that violate the direction law.
AgreementReport agreement_report(std::size_t samples, std::uint64_t seed,
                                 const AgreementOptions& opts = {},
                                 std::size_t workers = 1);

}  // namespace blotto
