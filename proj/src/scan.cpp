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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "blotto/adversary.hpp"
#include "blotto/parallel.hpp"
#include "blotto/payoffs.hpp"
#include "blotto/sampling.hpp"

namespace blotto {

std::string format_real(double v) {
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

void check_range(const AxisRange& r, const char* name) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo < 0 ||
      !(r.hi > r.lo)) {
    throw std::invalid_argument(std::string(name) +
                                " range must satisfy 0 <= lo < hi");
  }
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::vector<double> axis_points(const AxisRange& r, double step) {
  if (!(step > 0) || !std::isfinite(step)) {
    throw std::invalid_argument("step must be > 0");
  }
  const double width = r.hi - r.lo;
  if (step > width) return {r.hi};
  const auto n = static_cast<std::size_t>(std::floor(width / step + 1e-9));
  std::vector<double> pts;
  pts.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    pts.push_back(round12(r.lo + static_cast<double>(j + 1) * step));
  }
  return pts;
}

std::vector<ScanRecord> scan_plane(double phi1, double phi2,
                                   const AxisRange& x1_range,
                                   const AxisRange& x2_range, double step,
                                   const ScanOptions& opts) {
  validate({phi1, phi2, 1, 1});
  check_range(x1_range, "x1");
  check_range(x2_range, "x2");
  const auto xs1 = axis_points(x1_range, step);
  const auto xs2 = axis_points(x2_range, step);
  std::vector<ScanRecord> rows(xs1.size() * xs2.size());
  parallel_for(rows.size(), opts.workers, [&](std::size_t k) {
    const double x1 = xs1[k % xs1.size()];
    const double x2 = xs2[k / xs1.size()];
    const auto m = membership({phi1, phi2, x1, x2}, opts.membership);
    rows[k] = {x1,           x2, m.in_gv, m.in_gb, m.joint_feasible,
               m.in_measure_zero, m.case_label, m.region};
  });
  return rows;
}

std::string scan_csv(const std::vector<ScanRecord>& rows) {
  std::string out = "x1,x2,in_gv,in_gb,joint,measure_zero,case,region\n";
  for (const auto& r : rows) {
    out += format_real(r.x1) + ',' + format_real(r.x2) + ',' + flag(r.in_gv) +
           ',' + flag(r.in_gb) + ',' + flag(r.joint) + ',' +
           flag(r.measure_zero) + ',' + std::string(to_string(r.case_label)) +
           ',' + std::string(to_string(r.region)) + '\n';
  }
  return out;
}

std::vector<SweepRecord> sweep_valuation(const GameInstance& g, double from,
                                         double to, std::size_t n) {
  validate(g);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<SweepRecord> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t =
        n == 1 ? from
               : from + static_cast<double>(i) * (to - from) /
                            static_cast<double>(n - 1);
    if (!(t > -g.phi2 && t < g.phi1)) continue;
    const auto d = payoff_deltas(g, {t, 0});
    rows.push_back({t, d.delta1, d.delta2});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRecord>& rows) {
  std::string out = "tau_v,delta_u1,delta_u2\n";
  for (const auto& r : rows) {
    out += format_real(r.tau_v) + ',' + format_real(r.delta1) + ',' +
           format_real(r.delta2) + '\n';
  }
  return out;
}

std::vector<McRecord> mc_sample(double phi1, double phi2, std::size_t samples,
                                std::uint64_t seed, const AxisRange& x1_range,
                                const AxisRange& x2_range,
                                std::size_t workers) {
  validate({phi1, phi2, 1, 1});
  check_range(x1_range, "x1");
  check_range(x2_range, "x2");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<McRecord> rows(samples);
  parallel_for(samples, workers, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const double x1 = uniform_left_open(rng, x1_range.lo, x1_range.hi);
    const double x2 = uniform_left_open(rng, x2_range.lo, x2_range.hi);
    const GameInstance g{phi1, phi2, x1, x2};
    McRecord r{x1, x2, in_gv(g).member};
    const auto c = canonicalize(g).game;
    r.bound_applicable = budget_region(c) == BudgetRegion::A1 &&
                         c.phi1 * c.x2 > c.phi2 * c.x1;
    if (r.bound_applicable) {
      r.bound_holds = region1_ratio_bounds(c.x1, c.x2).contains(c.phi2 / c.phi1);
    }
    rows[i] = r;
  });
  return rows;
}

McSummary summarize(const std::vector<McRecord>& rows) {
  McSummary s;
  s.samples = rows.size();
  for (const auto& r : rows) {
    if (r.in_gv) ++s.members;
    if (!r.bound_applicable) continue;
    ++s.applicable;
    if (r.bound_holds == r.in_gv) ++s.agree;
  }
  return s;
}

std::string McSummary::line() const {
  std::ostringstream os;
  os << "samples=" << samples << " in_gv=" << members
     << " region1_samples=" << applicable << " region1_agree=" << agree;
  return os.str();
}

std::string mc_csv(const std::vector<McRecord>& rows) {
  std::string out = "x1,x2,in_gv\n";
  for (const auto& r : rows) {
    out += format_real(r.x1) + ',' + format_real(r.x2) + ',' + flag(r.in_gv) +
           '\n';
  }
  return out;
}

std::string scatter_svg(const std::vector<SvgPoint>& points,
                        const std::string& x_label,
                        const std::string& y_label) {
  constexpr double kSize = 400, kPad = 40;
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  if (!points.empty()) {
    x_lo = x_hi = points.front().x;
    y_lo = y_hi = points.front().y;
    for (const auto& p : points) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
  }
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_hi = y_lo + 1;
  const double w = kSize + 2 * kPad;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << w << "\">\n";
  os << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kSize
     << "\" height=\"" << kSize << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& p : points) {
    const double cx = kPad + (p.x - x_lo) / (x_hi - x_lo) * kSize;
    const double cy = kPad + kSize - (p.y - y_lo) / (y_hi - y_lo) * kSize;
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\""
       << p.color << "\"/>\n";
  }
  os << "<text x=\"" << w / 2 << "\" y=\"" << w - 8
     << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  os << "<text x=\"12\" y=\"" << w / 2 << "\" transform=\"rotate(-90 12 "
     << w / 2 << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace blotto
