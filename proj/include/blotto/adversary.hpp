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

#include "blotto/game.hpp"

namespace blotto {

// The adversary's split of its unit budget across the two fronts.
struct AdversaryAllocation {
  double xa1 = 0;
  double xa2 = 0;
};

// Adversary regime of the post-transfer game. Conditions are evaluated on the
// canonical orientation; at a boundary the lower-numbered case wins.
CaseLabel classify_case(const PostTransferGame& p);

// Closed-form best response:
//   Case 1: everything on the weak front.
//   Case 2: sqrt(phi_w x_w x_s / phi_s) on the weak front, rest elsewhere.
//   Case 3: sqrt(phi_w x_w) / (sqrt(phi_w x_w) + sqrt(phi_s x_s)).
//   Case 4: proportional split x_i / (x1 + x2). Any split with xa_i <= x_i is
//           optimal there; this one is deterministic and symmetric.
AdversaryAllocation adversary_allocation(const PostTransferGame& p);

// Value the adversary wins on one front: phi - front_payoff(phi, x_p, x_a).
double adversary_front_payoff(double phi, double x_p, double x_a);

// Total adversary value for a given split.
double adversary_total_payoff(const PostTransferGame& p, double xa1);

// Brute-force best response over xa1 in {0, 1/(n-1), ..., 1}; first index
// wins ties. Requires n >= 3.
AdversaryAllocation oracle_allocation(const PostTransferGame& p,
                                      std::size_t n = 10001);

}  // namespace blotto
