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
#include <string>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/transfers.hpp"

namespace blotto {

// Shortest decimal string that reads back to the same double.
std::string format_real(double v);

// Half-open range (lo, hi].
struct AxisRange {
  double lo = 0;
  double hi = 3;
};

// Grid points lo + step, lo + 2 step, ... up to hi. A step wider than the
// range yields the single point hi. Values are rounded to 12 significant
// digits.
std::vector<double> axis_points(const AxisRange& r, double step);

struct ScanRecord {
  double x1 = 0;
  double x2 = 0;
  bool in_gv = false;
  bool in_gb = false;
  bool joint = false;
  bool measure_zero = false;
  CaseLabel case_label = CaseLabel::C1a;
  BudgetRegion region = BudgetRegion::A1;
};

struct ScanOptions {
  std::size_t workers = 1;
  MembershipOptions membership;
};

// One record per (x1, x2) grid point, x2 in the outer loop.
std::vector<ScanRecord> scan_plane(double phi1, double phi2,
                                   const AxisRange& x1_range,
                                   const AxisRange& x2_range, double step,
                                   const ScanOptions& opts = {});
std::string scan_csv(const std::vector<ScanRecord>& rows);

struct SweepRecord {
  double tau_v = 0;
  double delta1 = 0;
  double delta2 = 0;
};

// n evenly spaced tau_v values from `from` to `to` inclusive; points outside
// the open domain (-phi2, phi1) are dropped.
std::vector<SweepRecord> sweep_valuation(const GameInstance& g, double from,
                                         double to, std::size_t n);
std::string sweep_csv(const std::vector<SweepRecord>& rows);

struct McRecord {
  double x1 = 0;
  double x2 = 0;
  bool in_gv = false;
  // Region-1 all-in bound is meaningful for this sample.
  bool bound_applicable = false;
  bool bound_holds = false;
};

struct McSummary {
  std::size_t samples = 0;
  std::size_t members = 0;
  std::size_t applicable = 0;
  std::size_t agree = 0;

  std::string line() const;
};

std::vector<McRecord> mc_sample(double phi1, double phi2, std::size_t samples,
                                std::uint64_t seed, const AxisRange& x1_range,
                                const AxisRange& x2_range,
                                std::size_t workers = 1);
McSummary summarize(const std::vector<McRecord>& rows);
std::string mc_csv(const std::vector<McRecord>& rows);

struct SvgPoint {
  double x = 0;
  double y = 0;
  std::string color;
};

std::string scatter_svg(const std::vector<SvgPoint>& points,
                        const std::string& x_label,
                        const std::string& y_label);

}  // namespace blotto
