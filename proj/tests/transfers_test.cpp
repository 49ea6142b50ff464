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

#include "blotto/transfers.hpp"

#include <cmath>

#include "blotto/adversary.hpp"
#include "blotto/errors.hpp"
#include "blotto/oracle.hpp"
#include "blotto/sampling.hpp"
#include "gtest/gtest.h"

namespace blotto {
namespace {

const GameInstance kAllIn{1.2, 1, 1.5, 2};
const GameInstance kPartial{1.2, 1, 0.4, 0.9};
const GameInstance kInterior{1.2, 1, 0.2, 0.3};
const GameInstance kSymmetric{1, 1, 1, 1};
const GameInstance kFlat{3, 1, 0.05, 0.15};

TEST(CaseSegments, LabelsMatchClassification) {
  auto rng = sample_rng(21, 0);
  for (int i = 0; i < 300; ++i) {
    const auto g = canonicalize(random_game(rng)).game;
    const auto segs = case_segments(g, {-g.phi2, g.phi1});
    ASSERT_FALSE(segs.empty());
    EXPECT_DOUBLE_EQ(segs.front().span.lo, -g.phi2);
    EXPECT_DOUBLE_EQ(segs.back().span.hi, g.phi1);
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (k > 0) {
        EXPECT_EQ(segs[k - 1].span.hi, segs[k].span.lo);
      }
      for (double f : {0.01, 0.5, 0.99}) {
        const double t = segs[k].span.lo + f * segs[k].span.width();
        EXPECT_EQ(classify_case(apply_transfer(g, {t, 0})), segs[k].label)
            << "tau=" << t;
      }
    }
  }
}

TEST(CasePayoffForms, ReproducePlayerPayoffs) {
  auto rng = sample_rng(22, 0);
  for (int i = 0; i < 300; ++i) {
    const auto g = canonicalize(random_game(rng)).game;
    for (const auto& seg : case_segments(g, {-g.phi2, g.phi1})) {
      const auto f = case_payoff_forms(g, seg.label);
      const double t = seg.span.lo + 0.37 * seg.span.width();
      const auto u = player_payoffs(g, {t, 0});
      EXPECT_NEAR(f.player1(g, t), u.u1, 1e-12 * (g.phi1 + g.phi2));
      EXPECT_NEAR(f.player2(g, t), u.u2, 1e-12 * (g.phi1 + g.phi2));
    }
  }
  EXPECT_THROW(case_payoff_forms(kSymmetric, CaseLabel::C4), OnCaseBoundary);
}

TEST(SuperlevelInterval, LinearAndRootParts) {
  // u = 0.5 (1.2 - t) > 0.4  <=>  t < 0.4.
  auto iv = superlevel_interval(kAllIn, {0, 0.6, -0.5}, 0.4);
  EXPECT_DOUBLE_EQ(iv.lo, -1);
  EXPECT_NEAR(iv.hi, 0.4, 1e-15);
  // sqrt((1.2 - t)(1 + t)) > sqrt(1.2) on (0, 0.2).
  iv = superlevel_interval(kAllIn, {1, 0, 0}, std::sqrt(1.2));
  EXPECT_NEAR(iv.lo, 0, 1e-14);
  EXPECT_NEAR(iv.hi, 0.2, 1e-14);
  EXPECT_TRUE(superlevel_interval(kAllIn, {1, 0, 0}, 2).empty());
}

TEST(RatioBounds, AllInWitness) {
  const auto b = region1_ratio_bounds(1.5, 2);
  EXPECT_NEAR(b.lower, 0.5556, 5e-5);
  EXPECT_DOUBLE_EQ(b.upper, 1);
  EXPECT_TRUE(b.contains(1 / 1.2));
}

TEST(TransitionTable, Lookup) {
  EXPECT_EQ(proposition_for(BudgetRegion::A1, CaseLabel::C1a, CaseLabel::C1b), 4);
  EXPECT_EQ(proposition_for(BudgetRegion::A4, CaseLabel::C2a, CaseLabel::C1b), 12);
  EXPECT_EQ(proposition_for(BudgetRegion::A5, CaseLabel::C2a, CaseLabel::C2b), 17);
  EXPECT_EQ(proposition_for(BudgetRegion::A3, CaseLabel::C2a, CaseLabel::C2a), 2);
  EXPECT_FALSE(proposition_for(BudgetRegion::A5, CaseLabel::C3, CaseLabel::C1b));
}

TEST(IntraCase, CaseTwoHasSmallTransfer) {
  const auto c = intra_case_beneficial(kPartial);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, CertificateKind::IntraCase);
  EXPECT_EQ(c->proposition, 2);
  EXPECT_EQ(c->direction, +1);
  EXPECT_EQ(c->interval.lo, 0);
  EXPECT_GT(c->interval.hi, 0);
}

TEST(IntraCase, NoneInCaseOneOrWeakCaseThree) {
  EXPECT_FALSE(intra_case_beneficial(kAllIn));
  EXPECT_FALSE(intra_case_beneficial(kInterior));
  EXPECT_THROW(intra_case_beneficial(kSymmetric), OnCaseBoundary);
}

TEST(IntraCase, CaseThreeThreshold) {
  // phi = (2, 1): x2 must exceed 8 x1.
  EXPECT_TRUE(intra_case_beneficial({2, 1, 0.01, 0.09}));
  EXPECT_FALSE(intra_case_beneficial({2, 1, 0.01, 0.07}));
}

TEST(InterCase, AllInWitnessInterval) {
  const auto cs = inter_case_beneficial(kAllIn);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].proposition, 4);
  EXPECT_EQ(cs[0].from, CaseLabel::C1a);
  EXPECT_EQ(cs[0].to, CaseLabel::C1b);
  EXPECT_NEAR(cs[0].interval.lo, 1.0 / 3, 1e-12);
  EXPECT_NEAR(cs[0].interval.hi, 0.4, 1e-12);
  EXPECT_GT(cs[0].interval.lo, 9.0 / 35);
  EXPECT_THROW(inter_case_beneficial(kSymmetric), OnCaseBoundary);
}

TEST(InGv, Examples) {
  EXPECT_TRUE(in_gv(kAllIn).member);
  EXPECT_TRUE(in_gv(kPartial).member);
  const auto s = in_gv(kSymmetric);
  EXPECT_FALSE(s.member);
  EXPECT_TRUE(s.on_boundary);
}

TEST(InGv, CertificatesAreSound) {
  auto rng = sample_rng(23, 0);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    const auto g = random_game(rng);
    for (const auto& c : in_gv(g).certificates) {
      ++seen;
      EXPECT_GT(c.interval.lo, -g.phi2);
      EXPECT_LT(c.interval.hi, g.phi1);
      for (int k = 1; k <= 100; ++k) {
        const double t = c.interval.lo + k * c.interval.width() / 101;
        EXPECT_TRUE(payoff_deltas(g, {t, 0}).mutually_beneficial())
            << g.phi1 << ' ' << g.phi2 << ' ' << g.x1 << ' ' << g.x2
            << " tau=" << t;
      }
    }
  }
  EXPECT_GT(seen, 20);
}

TEST(InGv, SwapConsistent) {
  auto rng = sample_rng(24, 0);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_game(rng);
    const auto a = in_gv(g);
    const auto b = in_gv(swap_players(g));
    EXPECT_EQ(a.member, b.member);
    ASSERT_EQ(a.certificates.size(), b.certificates.size());
    for (std::size_t k = 0; k < a.certificates.size(); ++k) {
      const auto& ca = a.certificates[k];
      const auto& cb = b.certificates[b.certificates.size() - 1 - k];
      EXPECT_EQ(ca.direction, -cb.direction);
      EXPECT_EQ(ca.interval.lo, -cb.interval.hi);
      EXPECT_EQ(ca.to, mirror(cb.to));
    }
  }
}

TEST(OppositeDirection, NeverBeneficial) {
  auto rng = sample_rng(25, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto g = random_game(rng);
    if (on_case_boundary(g)) continue;
    EXPECT_TRUE(opposite_direction_gains(g).empty());
  }
}

TEST(ValuationDirection, FollowsRelativeStrength) {
  EXPECT_EQ(valuation_direction(kAllIn), +1);
  EXPECT_EQ(valuation_direction({1, 1.2, 2, 1.5}), -1);
  EXPECT_THROW(valuation_direction(kSymmetric), NotInGv);
}

TEST(InGb, Examples) {
  EXPECT_FALSE(in_gb(kAllIn, 2001));
  EXPECT_FALSE(in_gb(kSymmetric, 2001));
  EXPECT_TRUE(in_gb(kPartial, 2001));
}

TEST(MeasureZero, Examples) {
  EXPECT_FALSE(in_measure_zero_joint(kAllIn));
  EXPECT_TRUE(in_measure_zero_joint(kFlat));
  EXPECT_TRUE(in_measure_zero_joint(kSymmetric));
  EXPECT_TRUE(in_measure_zero_joint({2, 1, 0.5, 1}));
  EXPECT_TRUE(in_measure_zero_joint(swap_players(kFlat)));
}

TEST(JointDirection, AllInGame) {
  const auto d = joint_beneficial_direction(kAllIn);
  ASSERT_TRUE(d);
  EXPECT_NEAR(std::hypot(d->d_b, d->d_v), 1, 1e-12);
  EXPECT_GT(0.26667 * d->d_b - 0.66667 * d->d_v, 0);
  EXPECT_GT(d->d_v, 0);
  EXPECT_TRUE(d->deltas.mutually_beneficial());
}

TEST(JointDirection, InteriorGame) {
  EXPECT_TRUE(joint_beneficial_direction(kInterior));
  EXPECT_FALSE(joint_beneficial_direction(kSymmetric));
}

TEST(JointDirection, ExceptionalPointStillHasDirection) {
  // Player 1's valuation derivative vanishes here, but Player 2's gradient
  // does not, so the two gradients are not opposed.
  const auto j = joint_gradients(kFlat);
  EXPECT_NEAR(j.player1.d_v, 0, 1e-15);
  EXPECT_NEAR(j.player2.d_b, 0, 1e-15);
  EXPECT_NEAR(j.player2.d_v, 0.1, 1e-15);
  EXPECT_TRUE(joint_beneficial_direction(kFlat));
}

TEST(Membership, Examples) {
  auto m = membership(kAllIn);
  EXPECT_TRUE(m.in_gv);
  EXPECT_FALSE(m.in_gb);
  EXPECT_TRUE(m.joint_feasible);
  EXPECT_FALSE(m.in_measure_zero);
  EXPECT_EQ(m.case_label, CaseLabel::C1a);
  EXPECT_EQ(m.region, BudgetRegion::A1);

  m = membership(kSymmetric);
  EXPECT_FALSE(m.in_gv);
  EXPECT_FALSE(m.in_gb);
  EXPECT_FALSE(m.joint_feasible);
  EXPECT_TRUE(m.in_measure_zero);
  EXPECT_TRUE(m.near_boundary);

  m = membership(kPartial);
  EXPECT_TRUE(m.in_gv);
  EXPECT_TRUE(m.in_gb);
  EXPECT_TRUE(m.joint_feasible);
}

TEST(Membership, SwapConsistent) {
  auto rng = sample_rng(26, 0);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_game(rng);
    const auto a = membership(g);
    const auto b = membership(swap_players(g));
    EXPECT_EQ(a.in_gv, b.in_gv);
    EXPECT_EQ(a.in_gb, b.in_gb);
    EXPECT_EQ(a.joint_feasible, b.joint_feasible);
    EXPECT_EQ(a.case_label, mirror(b.case_label));
    if (a.joint_direction && b.joint_direction) {
      EXPECT_NEAR(a.joint_direction->d_v, -b.joint_direction->d_v, 1e-12);
    }
  }
}

}  // namespace
}  // namespace blotto
