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

#include "blotto/adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "blotto/errors.hpp"
#include "blotto/payoffs.hpp"

namespace blotto {

namespace {

// Classification of a game already in canonical orientation.
CaseLabel classify_canonical(const GameInstance& g) {
  const double lhs = g.phi1 * g.x2;
  const double rhs = g.phi2 * g.x1;
  if (lhs == rhs) {
    return g.x1 + g.x2 < 1 ? CaseLabel::C3 : CaseLabel::C4;
  }
  const double s = std::sqrt(g.phi1 * g.x1 * g.x2 / g.phi2);
  if (s >= 1) return CaseLabel::C1a;
  if (s >= 1 - g.x2) return CaseLabel::C2a;
  if (1 - s > g.x2) return CaseLabel::C3;
  throw Unclassifiable("no case condition matches");
}

AdversaryAllocation allocate_canonical(const GameInstance& g, CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a:
      return {1.0, 0.0};
    case CaseLabel::C2a: {
      const double s = std::sqrt(g.phi1 * g.x1 * g.x2 / g.phi2);
      return {s, 1.0 - s};
    }
    case CaseLabel::C3: {
      const double w1 = std::sqrt(g.phi1 * g.x1);
      const double w2 = std::sqrt(g.phi2 * g.x2);
      return {w1 / (w1 + w2), w2 / (w1 + w2)};
    }
    case CaseLabel::C4:
      return {g.x1 / (g.x1 + g.x2), g.x2 / (g.x1 + g.x2)};
    default:
      throw Unclassifiable("canonical game reported a mirrored case");
  }
}

}  // namespace

CaseLabel classify_case(const PostTransferGame& p) {
  const auto cg = canonicalize(p.as_game());
  const CaseLabel c = classify_canonical(cg.game);
  return cg.swapped ? mirror(c) : c;
}

AdversaryAllocation adversary_allocation(const PostTransferGame& p) {
  const auto cg = canonicalize(p.as_game());
  const auto a = allocate_canonical(cg.game, classify_canonical(cg.game));
  if (cg.swapped) return {a.xa2, a.xa1};
  return a;
}

double adversary_front_payoff(double phi, double x_p, double x_a) {
  return phi - front_payoff(phi, x_p, x_a);
}

double adversary_total_payoff(const PostTransferGame& p, double xa1) {
  return adversary_front_payoff(p.phi1, p.x1, xa1) +
         adversary_front_payoff(p.phi2, p.x2, 1.0 - xa1);
}

AdversaryAllocation oracle_allocation(const PostTransferGame& p,
                                      std::size_t n) {
  if (n < 3) throw std::invalid_argument("oracle grid needs n >= 3");
  double best = -1;
  double best_a = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = adversary_total_payoff(p, a);
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  return {best_a, 1.0 - best_a};
}

}  // namespace blotto
