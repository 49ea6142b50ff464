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

#include "blotto/payoffs.hpp"

#include <cmath>

#include "blotto/adversary.hpp"
#include "blotto/errors.hpp"

namespace blotto {

double front_payoff(double phi, double x_p, double x_a) {
  if (x_a == 0) return phi;
  if (x_p <= x_a) return phi * x_p / (2 * x_a);
  return phi * (1 - x_a / (2 * x_p));
}

PayoffPair player_payoffs(const PostTransferGame& p) {
  const auto a = adversary_allocation(p);
  return {front_payoff(p.phi1, p.x1, a.xa1), front_payoff(p.phi2, p.x2, a.xa2)};
}

PayoffPair player_payoffs(const GameInstance& g, const TransferPair& t) {
  return player_payoffs(apply_transfer(g, t));
}

PayoffDeltas payoff_deltas(const GameInstance& g, const TransferPair& t) {
  const auto base = player_payoffs(PostTransferGame::at_origin(g));
  const auto moved = player_payoffs(g, t);
  return {moved.u1 - base.u1, moved.u2 - base.u2};
}

bool on_case_boundary(const GameInstance& g) {
  const auto c = canonicalize(g).game;
  if (c.phi1 * c.x2 == c.phi2 * c.x1) return true;
  const double s = std::sqrt(c.phi1 * c.x1 * c.x2 / c.phi2);
  return s == 1 || s == 1 - c.x2;
}

namespace {

// Gradients for a canonical game in the interior of C1a, C2a or C3.
JointGradients canonical_gradients(const GameInstance& g, CaseLabel c) {
  const double p1 = g.phi1, p2 = g.phi2, x1 = g.x1, x2 = g.x2;
  switch (c) {
    case CaseLabel::C1a: {
      const double h = x1 <= 1 ? x1 / 2 : 1 - 1 / (2 * x1);
      const double dh = x1 <= 1 ? 0.5 : 1 / (2 * x1 * x1);
      return {{p1 * dh, -h}, {0.0, 1.0}};
    }
    case CaseLabel::C2a: {
      const double r = std::sqrt(p1 * p2);
      const double gb = r * (x1 + x2) / (4 * std::pow(x2, 1.5) * std::sqrt(x1));
      const double gv = 0.25 * (p1 - p2) * std::sqrt(x1 / (x2 * p1 * p2));
      return {{gb, gv}, {-p2 / (2 * x2 * x2) + gb, 1 - 1 / (2 * x2) + gv}};
    }
    case CaseLabel::C3: {
      const double k = std::sqrt(p1 * p2 / (x1 * x2));
      const double m = std::sqrt(x1 * x2 / (p1 * p2));
      const double cb = 0.25 * k * (x2 - x1);
      const double cv = 0.25 * m * (p1 - p2);
      return {{0.5 * p1 + cb, -0.5 * x1 + cv}, {-0.5 * p2 + cb, 0.5 * x2 + cv}};
    }
    default:
      throw OnCaseBoundary("no smooth payoff at a Case-4 game");
  }
}

}  // namespace

JointGradients joint_gradients(const GameInstance& g) {
  validate(g);
  if (on_case_boundary(g)) throw OnCaseBoundary("game lies on a case boundary");
  const auto cg = canonicalize(g);
  const auto label = classify_case(PostTransferGame::at_origin(cg.game));
  const auto grads = canonical_gradients(cg.game, label);
  if (!cg.swapped) return grads;
  // Swapping players negates both transfer coordinates.
  return {{-grads.player2.d_b, -grads.player2.d_v},
          {-grads.player1.d_b, -grads.player1.d_v}};
}

ValuationDerivatives valuation_derivatives(const GameInstance& g) {
  const auto j = joint_gradients(g);
  return {j.player1.d_v, j.player2.d_v};
}

JointGradients fd_gradient(const GameInstance& g, double h) {
  validate(g);
  const auto origin = classify_case(PostTransferGame::at_origin(g));
  auto probe = [&](double tb, double tv) {
    const auto p = apply_transfer(g, {tv, tb});
    if (classify_case(p) != origin) {
      throw StepTooLarge("finite-difference probe crossed a case boundary");
    }
    return player_payoffs(p);
  };
  const auto bp = probe(h, 0), bm = probe(-h, 0);
  const auto vp = probe(0, h), vm = probe(0, -h);
  const double inv = 1 / (2 * h);
  return {{(bp.u1 - bm.u1) * inv, (vp.u1 - vm.u1) * inv},
          {(bp.u2 - bm.u2) * inv, (vp.u2 - vm.u2) * inv}};
}

}  // namespace blotto
