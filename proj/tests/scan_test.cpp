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

#include "blotto/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "blotto/transfers.hpp"
#include "gtest/gtest.h"

namespace blotto {
namespace {

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1.0 / 3), "0.3333333333333333");
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::strtod(format_real(v).c_str(), nullptr), v);
}

TEST(AxisPoints, HalfOpenGrid) {
  const auto pts = axis_points({0, 3}, 0.02);
  ASSERT_EQ(pts.size(), 150u);
  EXPECT_EQ(pts.front(), 0.02);
  EXPECT_EQ(pts[2], 0.06);
  EXPECT_EQ(pts.back(), 3);
  EXPECT_EQ(axis_points({0, 1}, 5), std::vector<double>{1});
  EXPECT_THROW(axis_points({0, 1}, 0), std::invalid_argument);
}

TEST(ScanPlane, RowOrderAndHeader) {
  const auto rows = scan_plane(1.2, 1, {0, 0.3}, {0, 0.2}, 0.1);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].x1, 0.1);
  EXPECT_EQ(rows[1].x1, 0.2);
  EXPECT_EQ(rows[3].x2, 0.2);
  const auto csv = scan_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "x1,x2,in_gv,in_gb,joint,measure_zero,case,region");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(ScanPlane, StepWiderThanRangeGivesOneRow) {
  EXPECT_EQ(scan_plane(1.2, 1, {0, 1}, {0, 1}, 2).size(), 1u);
}

TEST(ScanPlane, RejectsBadRange) {
  EXPECT_THROW(scan_plane(1.2, 1, {1, 0.5}, {0, 1}, 0.1), std::invalid_argument);
}

TEST(ScanPlane, FlagsMatchMembership) {
  const auto rows = scan_plane(1.2, 1, {0, 2}, {0, 2}, 0.25);
  for (std::size_t i = 0; i < rows.size(); i += 7) {
    const auto m = membership({1.2, 1, rows[i].x1, rows[i].x2});
    EXPECT_EQ(rows[i].in_gv, m.in_gv);
    EXPECT_EQ(rows[i].in_gb, m.in_gb);
    EXPECT_EQ(rows[i].joint, m.joint_feasible);
    EXPECT_EQ(rows[i].measure_zero, m.in_measure_zero);
  }
}

TEST(ScanPlane, WorkerCountDoesNotChangeOutput) {
  const auto a = scan_csv(scan_plane(1.2, 1, {0, 3}, {0, 3}, 0.2));
  ScanOptions opts;
  opts.workers = 4;
  EXPECT_EQ(a, scan_csv(scan_plane(1.2, 1, {0, 3}, {0, 3}, 0.2, opts)));
}

TEST(Sweep, AllInWitnessShape) {
  const GameInstance g{1.2, 1, 1.5, 2};
  const auto rows = sweep_valuation(g, -1, 1.2, 2201);
  EXPECT_EQ(rows.size(), 2199u);
  bool saw_zero = false;
  double lo = 1, hi = -1;
  for (const auto& r : rows) {
    if (r.tau_v == 0) {
      saw_zero = true;
      EXPECT_EQ(r.delta1, 0);
      EXPECT_EQ(r.delta2, 0);
    }
    if (r.delta1 > 0 && r.delta2 > 0) {
      lo = std::min(lo, r.tau_v);
      hi = std::max(hi, r.tau_v);
    }
    const auto d = payoff_deltas(g, {r.tau_v, 0});
    EXPECT_NEAR(d.delta1, r.delta1, 1e-12);
  }
  EXPECT_TRUE(saw_zero);
  EXPECT_NEAR(lo, 1.0 / 3, 1.5e-3);
  EXPECT_NEAR(hi, 0.4, 1.5e-3);
  EXPECT_EQ(sweep_csv(rows).substr(0, 24), "tau_v,delta_u1,delta_u2\n");
}

TEST(Sweep, SymmetricGameNeverBeneficial) {
  for (const auto& r : sweep_valuation({1, 1, 1, 1}, -0.99, 0.99, 199)) {
    EXPECT_FALSE(r.delta1 > 0 && r.delta2 > 0);
  }
}

TEST(MonteCarlo, DeterministicAndWorkerIndependent) {
  const auto a = mc_csv(mc_sample(1.2, 1, 300, 7, {0, 3}, {0, 3}, 1));
  const auto b = mc_csv(mc_sample(1.2, 1, 300, 7, {0, 3}, {0, 3}, 4));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, mc_csv(mc_sample(1.2, 1, 300, 8, {0, 3}, {0, 3}, 1)));
  EXPECT_EQ(mc_sample(1.2, 1, 1, 7, {0, 3}, {0, 3}).size(), 1u);
}

TEST(MonteCarlo, AllInBoundMatchesMembership) {
  const auto rows = mc_sample(1.2, 1, 1000, 42, {0, 3}, {0, 3});
  const auto s = summarize(rows);
  EXPECT_EQ(s.samples, 1000u);
  EXPECT_GT(s.applicable, 0u);
  EXPECT_EQ(s.agree, s.applicable);
  for (const auto& r : rows) {
    EXPECT_GT(r.x1, 0);
    EXPECT_LE(r.x1, 3);
  }
}

TEST(Svg, ContainsOnePointPerRecord) {
  const auto svg = scatter_svg({{0, 0, "red"}, {1, 1, "blue"}}, "x1", "x2");
  std::size_t n = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos;
       p = svg.find("<circle", p + 1)) {
    ++n;
  }
  EXPECT_EQ(n, 2u);
}

}  // namespace
}  // namespace blotto
