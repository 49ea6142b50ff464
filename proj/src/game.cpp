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

#include "blotto/game.hpp"

#include <cmath>

#include "blotto/errors.hpp"

namespace blotto {

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a: return "C1a";
    case CaseLabel::C2a: return "C2a";
    case CaseLabel::C3: return "C3";
    case CaseLabel::C4: return "C4";
    case CaseLabel::C1b: return "C1b";
    case CaseLabel::C2b: return "C2b";
  }
  return "?";
}

std::string_view to_string(BudgetRegion r) {
  switch (r) {
    case BudgetRegion::A1: return "A1";
    case BudgetRegion::A2: return "A2";
    case BudgetRegion::A3: return "A3";
    case BudgetRegion::A4: return "A4";
    case BudgetRegion::A5: return "A5";
  }
  return "?";
}

CaseLabel mirror(CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a: return CaseLabel::C1b;
    case CaseLabel::C2a: return CaseLabel::C2b;
    case CaseLabel::C1b: return CaseLabel::C1a;
    case CaseLabel::C2b: return CaseLabel::C2a;
    default: return c;
  }
}

namespace {

void check_field(double v, const char* name) {
  if (!std::isfinite(v)) throw NonFinite(name);
  if (v <= 0) throw NonPositiveParameter(name);
}

}  // namespace

void validate(const GameInstance& g) {
  check_field(g.phi1, "phi1");
  check_field(g.phi2, "phi2");
  check_field(g.x1, "x1");
  check_field(g.x2, "x2");
}

PostTransferGame apply_transfer(const GameInstance& g, const TransferPair& t) {
  if (!std::isfinite(t.tau_v)) throw NonFinite("tau_v");
  if (!std::isfinite(t.tau_b)) throw NonFinite("tau_b");
  if (!(t.tau_v > -g.phi2)) throw TransferOutOfRange("tau_v", -g.phi2, false);
  if (!(t.tau_v < g.phi1)) throw TransferOutOfRange("tau_v", g.phi1, true);
  if (!(t.tau_b > -g.x1)) throw TransferOutOfRange("tau_b", -g.x1, false);
  if (!(t.tau_b < g.x2)) throw TransferOutOfRange("tau_b", g.x2, true);
  return {g.phi1 - t.tau_v, g.phi2 + t.tau_v, g.x1 + t.tau_b, g.x2 - t.tau_b};
}

GameInstance swap_players(const GameInstance& g) {
  return {g.phi2, g.phi1, g.x2, g.x1};
}

bool is_canonical(double phi1, double phi2, double x1, double x2) {
  return phi1 * x2 >= phi2 * x1;
}

CanonicalGame canonicalize(const GameInstance& g) {
  if (is_canonical(g.phi1, g.phi2, g.x1, g.x2)) return {g, false};
  return {swap_players(g), true};
}

BudgetRegion budget_region(double x1, double x2) {
  if (x1 >= 1 && x2 >= 1) return BudgetRegion::A1;
  if (x1 >= 1) return BudgetRegion::A2;
  if (x2 >= 1) return BudgetRegion::A3;
  if (x1 + x2 >= 1) return BudgetRegion::A4;
  return BudgetRegion::A5;
}

}  // namespace blotto
