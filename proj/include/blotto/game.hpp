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

#include <string_view>

namespace blotto {

// One coalitional Blotto instance. Valuations are front totals; the
// adversary's budget is normalized to 1 and never stored.
struct GameInstance {
  double phi1 = 0;
  double phi2 = 0;
  double x1 = 0;
  double x2 = 0;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

// Signed transfer amounts.
//   tau_v > 0 moves battlefield valuation from Player 1 to Player 2,
//             domain (-phi2, phi1).
//   tau_b > 0 moves budget from Player 2 to Player 1, domain (-x1, x2).
// A budget transfer "from 1 to 2" of size t is tau_b = -t.
struct TransferPair {
  double tau_v = 0;
  double tau_b = 0;
};

// Parameters after a transfer has been applied. Same shape as GameInstance;
// kept distinct so stage-2 code cannot be handed an untransferred game by
// accident.
struct PostTransferGame {
  double phi1 = 0;
  double phi2 = 0;
  double x1 = 0;
  double x2 = 0;

  // The identity transfer.
  static PostTransferGame at_origin(const GameInstance& g) {
    return {g.phi1, g.phi2, g.x1, g.x2};
  }
  GameInstance as_game() const { return {phi1, phi2, x1, x2}; }

  friend bool operator==(const PostTransferGame&,
                         const PostTransferGame&) = default;
};

// Adversary best-response regime. The "a" labels mean Player 1 is the
// relatively weaker side (phi1/phi2 >= x1/x2), "b" the mirror image.
enum class CaseLabel { C1a, C2a, C3, C4, C1b, C2b };

// Partition of the budget quadrant.
//   A1: x1 >= 1, x2 >= 1      A2: x1 >= 1, x2 < 1      A3: x1 < 1, x2 >= 1
//   A4: x1 < 1, x2 < 1, x1 + x2 >= 1                   A5: x1 + x2 < 1
enum class BudgetRegion { A1, A2, A3, A4, A5 };

std::string_view to_string(CaseLabel c);
std::string_view to_string(BudgetRegion r);

// a <-> b; C3 and C4 are their own mirror.
CaseLabel mirror(CaseLabel c);

// Throws NonFinite or NonPositiveParameter naming the first bad field.
void validate(const GameInstance& g);

// Throws TransferOutOfRange when either component leaves its open domain.
PostTransferGame apply_transfer(const GameInstance& g, const TransferPair& t);

// Exchanges the roles of the two players.
GameInstance swap_players(const GameInstance& g);

struct CanonicalGame {
  GameInstance game;
  bool swapped = false;
};

// Returns the orientation with phi1/phi2 >= x1/x2. Ties keep the original
// orientation.
CanonicalGame canonicalize(const GameInstance& g);

// True iff phi1/phi2 >= x1/x2, evaluated by cross-multiplication.
bool is_canonical(double phi1, double phi2, double x1, double x2);

BudgetRegion budget_region(double x1, double x2);
inline BudgetRegion budget_region(const GameInstance& g) {
  return budget_region(g.x1, g.x2);
}

}  // namespace blotto
