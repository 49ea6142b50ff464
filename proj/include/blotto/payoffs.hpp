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

#include "blotto/game.hpp"

namespace blotto {

// Equilibrium payoffs of the two players.
struct PayoffPair {
  double u1 = 0;
  double u2 = 0;
};

struct PayoffDeltas {
  double delta1 = 0;
  double delta2 = 0;

  // Both players strictly gain.
  bool mutually_beneficial() const { return delta1 > 0 && delta2 > 0; }
};

// Partial derivatives with respect to (tau_b, tau_v), budget flowing 2 -> 1.
struct Gradient2 {
  double d_b = 0;
  double d_v = 0;
};

struct JointGradients {
  Gradient2 player1;
  Gradient2 player2;
};

struct ValuationDerivatives {
  double d1 = 0;
  double d2 = 0;
};

// Player's equilibrium value on a single front of total value phi, with
// player budget x_p and adversary allocation x_a:
//   x_a == 0     -> phi (uncontested)
//   x_p <= x_a   -> phi * x_p / (2 x_a)
//   otherwise    -> phi * (1 - x_a / (2 x_p))
double front_payoff(double phi, double x_p, double x_a);

// Applies the transfer, lets the adversary best-respond, and returns both
// players' payoffs.
PayoffPair player_payoffs(const GameInstance& g, const TransferPair& t);
PayoffPair player_payoffs(const PostTransferGame& p);

// u_i(t) - u_i(0, 0).
PayoffDeltas payoff_deltas(const GameInstance& g, const TransferPair& t);

// d u_i / d tau_v at the origin from the case closed forms. Throws
// OnCaseBoundary unless g lies in the interior of Case 1, 2 or 3.
ValuationDerivatives valuation_derivatives(const GameInstance& g);

// Gradients of u1 and u2 at the origin. Case 1 uses the all-in forms, Case 2
// the single-sqrt forms and Case 3 the interior forms; "b" games are
// evaluated on the mirrored game and mapped back. Derivatives at any other
// transfer are obtained by re-basing: apply_transfer, then differentiate at
// the new origin.
JointGradients joint_gradients(const GameInstance& g);

// Central differences of player_payoffs in tau_b and tau_v. Throws
// StepTooLarge if any probe lands in a different case than the origin.
JointGradients fd_gradient(const GameInstance& g, double h = 1e-5);

// True when g sits exactly on a case boundary (including Case 4).
bool on_case_boundary(const GameInstance& g);

}  // namespace blotto
