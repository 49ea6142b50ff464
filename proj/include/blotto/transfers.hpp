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
#include <optional>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/payoffs.hpp"

namespace blotto {

// Open interval (lo, hi). Empty when !(lo < hi).
struct Interval {
  double lo = 0;
  double hi = 0;

  bool empty() const { return !(lo < hi); }
  double width() const { return hi - lo; }
  bool contains(double t) const { return lo < t && t < hi; }
};

enum class CertificateKind { IntraCase, InterCase };

// Constructive proof that a game admits a mutually beneficial valuation
// transfer: every tau_v in `interval` strictly improves both players.
//
// Cases and intervals are reported in the game's own orientation, so a game
// whose Player 1 is relatively stronger gets negative intervals and
// direction -1.
struct Certificate {
  CertificateKind kind = CertificateKind::IntraCase;
  CaseLabel from = CaseLabel::C1a;
  CaseLabel to = CaseLabel::C1a;
  // Characterization id (1-17) of this transition family. Empty for
  // transitions outside the numbered list; those are evaluated with the same
  // machinery.
  std::optional<int> proposition;
  Interval interval;
  int direction = +1;
};

// ---------------------------------------------------------------------------
// Case-local machinery shared by the valuation predicates.
//
// Along a valuation-only transfer the budgets are fixed and the post-transfer
// ratio (phi1 - t) / (phi2 + t) falls monotonically, so the adversary regime
// passes through C1a -> C2a -> C3 -> C2b -> C1b (skipping cases that do not
// exist for the given budgets). Inside each regime both payoffs have the form
//   u(t) = root_coef * sqrt((phi1 - t)(phi2 + t)) + offset + slope * t,
// which is concave in t.
// ---------------------------------------------------------------------------

struct CaseSegment {
  CaseLabel label = CaseLabel::C1a;
  Interval span;
};

struct SqrtLinearForm {
  double root_coef = 0;
  double offset = 0;
  double slope = 0;

  double operator()(const GameInstance& g, double tau) const;
};

struct CasePayoffForms {
  SqrtLinearForm player1;
  SqrtLinearForm player2;
};

// Regimes crossed by tau_v in `range` (subset of (-phi2, phi1)) for a game in
// canonical orientation. Adjacent pieces with the same label are merged.
std::vector<CaseSegment> case_segments(const GameInstance& canonical,
                                       Interval range);

// Payoff forms for a canonical game whose post-transfer regime is `c`.
// Throws OnCaseBoundary for C4.
CasePayoffForms case_payoff_forms(const GameInstance& canonical, CaseLabel c);

// { t in (-phi2, phi1) : f(t) > baseline }, an open interval by concavity.
// Break-even points come from quadratic_roots on the squared inequality.
Interval superlevel_interval(const GameInstance& canonical,
                             const SqrtLinearForm& f, double baseline);

// Characterization id for a (region, source, target) transition on the
// canonical side, if the numbered list has one. Source == target maps to the
// intra-case ids 1-3.
std::optional<int> proposition_for(BudgetRegion region, CaseLabel from,
                                   CaseLabel to);

// Bounds of the Region-1 all-in condition
//   (2 x1 x2 - x1 - x2) / (2 x1^2) < phi2 / phi1 < (2 x2 - 1) / (2 x1).
struct RatioBounds {
  double lower = 0;
  double upper = 0;
  bool contains(double r) const { return lower < r && r < upper; }
};
RatioBounds region1_ratio_bounds(double x1, double x2);

// ---------------------------------------------------------------------------
// Valuation transfers.
// ---------------------------------------------------------------------------

// Arbitrarily small transfers that stay within the starting case. None in
// Case 1; in Case 2 iff phi2 < phi1 and (2 - 4 x2) / (phi1 - phi2) <
// sqrt(x1 x2 / (phi1 phi2)); in Case 3 iff phi2 < phi1 and
// x2 > 4 phi1 phi2 x1 / (phi1 - phi2)^2. The interval runs from 0 to the
// first break-even point, located by bisection on the concave case payoffs.
// Throws OnCaseBoundary unless g is interior to Case 1, 2 or 3.
std::optional<Certificate> intra_case_beneficial(const GameInstance& g);

// Transfers that land in a different case: one certificate per target case
// whose interval (case-switch thresholds intersected with both break-even
// ranges) is nonempty. Throws OnCaseBoundary on a case boundary.
std::vector<Certificate> inter_case_beneficial(const GameInstance& g);

// Mutually beneficial valuation transfers in the direction opposite to the
// one allowed by the direction law. Always empty for valid games; exposed so
// tests can check the negative-direction exclusions explicitly.
std::vector<Interval> opposite_direction_gains(const GameInstance& g);

struct GvResult {
  bool member = false;
  std::vector<Certificate> certificates;
  // g lies on a case boundary; the verdict came from the grid oracle.
  bool on_boundary = false;
  // Smallest relative slack over every inequality that decided the verdict.
  double margin = 0;
};

// Membership in the set of games with a mutually beneficial valuation
// transfer. phi1/phi2 == x1/x2 is never a member.
GvResult in_gv(const GameInstance& g);

// +1 iff phi1/phi2 > x1/x2, -1 otherwise. Throws NotInGv for non-members.
int valuation_direction(const GameInstance& g);

// ---------------------------------------------------------------------------
// Budget and joint transfers.
// ---------------------------------------------------------------------------

// Grid-oracle membership for budget-only transfers, n interior points of
// (-x1, x2).
bool in_gb(const GameInstance& g, std::size_t n = 2001);

// True iff, within relative tolerance `tol`, the canonical game lies on a
// case boundary, on the Case-2 locus
//   phi1 (1 - 2 x2) / (phi1 - phi2) == x1 / (x1 + x2),
// or on the Case-3 point set phi1/phi2 == 3, x2 == 4 phi1 phi2 x1 /
// (phi1 - phi2)^2.
bool in_measure_zero_joint(const GameInstance& g, double tol = 1e-9);

struct JointDirection {
  // Unit vector in (tau_b, tau_v) with positive directional derivative for
  // both players.
  double d_b = 0;
  double d_v = 0;
  // The step used to confirm it, and the deltas observed there.
  TransferPair probe;
  PayoffDeltas deltas;
};

// Direction along which both payoffs increase, built as the bisector of the
// two normalized gradients. Confirmed by payoff_deltas at step
// 1e-4 * min(phi1, phi2, x1, x2), halved up to 40 times if the first probe
// overshoots. Empty when the gradients are zero or opposed, or on a case
// boundary.
std::optional<JointDirection> joint_beneficial_direction(const GameInstance& g);

struct MembershipRecord {
  bool in_gv = false;
  std::vector<Certificate> certificates;
  bool in_gb = false;
  bool joint_feasible = false;
  bool in_measure_zero = false;
  CaseLabel case_label = CaseLabel::C1a;
  BudgetRegion region = BudgetRegion::A1;
  std::optional<JointDirection> joint_direction;
  // Relative slack of the valuation verdict; near_boundary when <= 1e-9.
  double margin = 0;
  bool near_boundary = false;
};

struct MembershipOptions {
  std::size_t gb_grid = 2001;
  double measure_zero_tol = 1e-9;
};

MembershipRecord membership(const GameInstance& g,
                            const MembershipOptions& opts = {});

}  // namespace blotto
