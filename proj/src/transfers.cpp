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

#include <algorithm>
#include <cmath>
#include <limits>

#include "blotto/adversary.hpp"
#include "blotto/errors.hpp"
#include "blotto/oracle.hpp"
#include "blotto/quadratic.hpp"

namespace blotto {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double h_factor(double x) { return x <= 1 ? x / 2 : 1 - 1 / (2 * x); }

Interval intersect(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval hull(Interval a, Interval b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval domain(const GameInstance& g) { return {-g.phi2, g.phi1}; }

CaseLabel origin_case(const GameInstance& g) {
  return classify_case(PostTransferGame::at_origin(g));
}

}  // namespace

double SqrtLinearForm::operator()(const GameInstance& g, double tau) const {
  const double q = std::max(0.0, (g.phi1 - tau) * (g.phi2 + tau));
  return root_coef * std::sqrt(q) + offset + slope * tau;
}

std::vector<CaseSegment> case_segments(const GameInstance& g, Interval range) {
  const double p1 = g.phi1, p2 = g.phi2, x1 = g.x1, x2 = g.x2;
  const double xx = x1 * x2;
  const double alpha = (p1 * x2 - p2 * x1) / (x1 + x2);
  const double t12a = (xx * p1 - p2) / (xx + 1);
  const double t23a =
      x2 < 1 ? (xx * p1 - (1 - x2) * (1 - x2) * p2) / (xx + (1 - x2) * (1 - x2))
             : kInf;
  const double t3b =
      x1 < 1 ? ((1 - x1) * (1 - x1) * p1 - xx * p2) / ((1 - x1) * (1 - x1) + xx)
             : -kInf;
  const double t1b = (p1 - xx * p2) / (1 + xx);

  std::vector<CaseSegment> pieces;
  auto push = [&](CaseLabel c, double lo, double hi) {
    if (!(lo < hi)) return;
    if (!pieces.empty() && pieces.back().label == c &&
        pieces.back().span.hi == lo) {
      pieces.back().span.hi = hi;
      return;
    }
    pieces.push_back({c, {lo, hi}});
  };

  const double a_hi = std::min(alpha, range.hi);
  if (range.lo < a_hi) {
    const double e1 = std::clamp(t12a, range.lo, a_hi);
    const double e2 = std::clamp(t23a, e1, a_hi);
    push(CaseLabel::C1a, range.lo, e1);
    push(CaseLabel::C2a, e1, e2);
    push(CaseLabel::C3, e2, a_hi);
  }
  const double b_lo = std::max(alpha, range.lo);
  if (b_lo < range.hi) {
    const double f3 = std::clamp(t3b, b_lo, range.hi);
    const double f1 = std::clamp(t1b, f3, range.hi);
    push(CaseLabel::C3, b_lo, f3);
    push(CaseLabel::C2b, f3, f1);
    push(CaseLabel::C1b, f1, range.hi);
  }
  return pieces;
}

CasePayoffForms case_payoff_forms(const GameInstance& g, CaseLabel c) {
  const double p1 = g.phi1, p2 = g.phi2, x1 = g.x1, x2 = g.x2;
  switch (c) {
    case CaseLabel::C1a: {
      const double h = h_factor(x1);
      return {{0, h * p1, -h}, {0, p2, 1}};
    }
    case CaseLabel::C1b: {
      const double h = h_factor(x2);
      return {{0, p1, -1}, {0, h * p2, h}};
    }
    case CaseLabel::C2a: {
      const double a = 0.5 * std::sqrt(x1 / x2);
      const double c2 = 1 - 1 / (2 * x2);
      return {{a, 0, 0}, {a, c2 * p2, c2}};
    }
    case CaseLabel::C2b: {
      const double a = 0.5 * std::sqrt(x2 / x1);
      const double c1 = 1 - 1 / (2 * x1);
      return {{a, c1 * p1, -c1}, {a, 0, 0}};
    }
    case CaseLabel::C3: {
      const double a = 0.5 * std::sqrt(x1 * x2);
      return {{a, 0.5 * x1 * p1, -0.5 * x1}, {a, 0.5 * x2 * p2, 0.5 * x2}};
    }
    case CaseLabel::C4:
      break;
  }
  throw OnCaseBoundary("Case 4 has no smooth payoff form");
}

Interval superlevel_interval(const GameInstance& g, const SqrtLinearForm& f,
                             double baseline) {
  const Interval dom = domain(g);
  const double m0 = f.offset - baseline;
  const double m1 = f.slope;

  // Where the linear part alone already exceeds the baseline.
  Interval linear_part{0, 0};
  Interval linear_nonpos{0, 0};
  if (m1 > 0) {
    linear_part = intersect(dom, {-m0 / m1, kInf});
    linear_nonpos = intersect(dom, {-kInf, -m0 / m1});
  } else if (m1 < 0) {
    linear_part = intersect(dom, {-kInf, -m0 / m1});
    linear_nonpos = intersect(dom, {-m0 / m1, kInf});
  } else if (m0 > 0) {
    linear_part = dom;
  } else {
    linear_nonpos = dom;
  }
  if (f.root_coef == 0) return linear_part;

  const double a2 = f.root_coef * f.root_coef;
  const auto roots = quadratic_roots(-a2 - m1 * m1,
                                     a2 * (g.phi1 - g.phi2) - 2 * m0 * m1,
                                     a2 * g.phi1 * g.phi2 - m0 * m0);
  if (roots.kind != QuadraticRoots::Kind::TwoReal) return linear_part;
  const Interval root_part =
      intersect(linear_nonpos, {roots.z_minus, roots.z_plus});
  return intersect(dom, hull(linear_part, root_part));
}

std::optional<int> proposition_for(BudgetRegion region, CaseLabel from,
                                   CaseLabel to) {
  using C = CaseLabel;
  using R = BudgetRegion;
  if (from == to) {
    if (from == C::C1a) return 1;
    if (from == C::C2a) return 2;
    if (from == C::C3) return 3;
    return std::nullopt;
  }
  struct Row {
    R region;
    C from;
    C to;
    int prop;
  };
  static constexpr Row kTable[] = {
      {R::A1, C::C1a, C::C1b, 4},  {R::A2, C::C1a, C::C1b, 5},
      {R::A2, C::C1a, C::C2b, 6},  {R::A3, C::C1a, C::C2a, 7},
      {R::A3, C::C1a, C::C1b, 8},  {R::A3, C::C2a, C::C1b, 9},
      {R::A4, C::C1a, C::C1b, 10}, {R::A4, C::C1a, C::C2b, 11},
      {R::A4, C::C2a, C::C1b, 12}, {R::A4, C::C2a, C::C2b, 13},
      {R::A5, C::C1a, C::C3, 14},  {R::A5, C::C1a, C::C2b, 15},
      {R::A5, C::C2a, C::C3, 16},  {R::A5, C::C2a, C::C2b, 17},
  };
  for (const auto& row : kTable) {
    if (row.region == region && row.from == from && row.to == to) {
      return row.prop;
    }
  }
  return std::nullopt;
}

RatioBounds region1_ratio_bounds(double x1, double x2) {
  return {(2 * x1 * x2 - x1 - x2) / (2 * x1 * x1), (2 * x2 - 1) / (2 * x1)};
}

namespace {

struct Analysis {
  CaseLabel origin = CaseLabel::C1a;
  std::vector<Certificate> positive;  // canonical orientation, tau > 0
  std::vector<Certificate> negative;  // canonical orientation, tau < 0
  double margin = kInf;
};

// Farthest point from 0 (towards `end`) before f drops to f(0), for a
// concave f that increases away from 0.
double break_even(const GameInstance& g, const SqrtLinearForm& f, double end) {
  const double base = f(g, 0);
  if (f(g, end) - base > 0) return end;
  double inside = 0, outside = end;
  const double tol = 1e-12 * (g.phi1 + g.phi2);
  for (int i = 0; i < 200 && std::fabs(outside - inside) > tol; ++i) {
    const double mid = 0.5 * (inside + outside);
    if (f(g, mid) - base > 0) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside;
}

// max over the span of min(u1 - b1, u2 - b2); concave, so ternary search.
double best_common_gain(const GameInstance& g, const CasePayoffForms& forms,
                        Interval span, double b1, double b2) {
  auto gain = [&](double t) {
    return std::min(forms.player1(g, t) - b1, forms.player2(g, t) - b2);
  };
  double lo = span.lo, hi = span.hi;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3;
    const double m2 = hi - (hi - lo) / 3;
    if (gain(m1) < gain(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return gain(0.5 * (lo + hi));
}

bool intra_condition(const GameInstance& g, CaseLabel c) {
  const double p1 = g.phi1, p2 = g.phi2, x1 = g.x1, x2 = g.x2;
  switch (c) {
    case CaseLabel::C2a:
      return p2 < p1 &&
             (2 - 4 * x2) / (p1 - p2) < std::sqrt(x1 * x2 / (p1 * p2));
    case CaseLabel::C3:
      return p2 < p1 && x2 > 4 * p1 * p2 * x1 / ((p1 - p2) * (p1 - p2));
    default:
      return false;
  }
}

// Exhaustive analysis of valuation transfers for a canonical game in the
// interior of a case.
Analysis analyze(const GameInstance& g) {
  Analysis out;
  out.origin = origin_case(g);
  const BudgetRegion region = budget_region(g);
  const double scale = g.phi1 + g.phi2;
  const auto base = player_payoffs(PostTransferGame::at_origin(g));
  const Interval dom = domain(g);

  for (const auto& seg : case_segments(g, dom)) {
    const auto forms = case_payoff_forms(g, seg.label);
    if (seg.span.contains(0)) {
      for (double e : {seg.span.lo, seg.span.hi}) {
        if (e != dom.lo && e != dom.hi) {
          out.margin = std::min(out.margin, std::fabs(e) / scale);
        }
      }
      const auto d = valuation_derivatives(g);
      out.margin = std::min(out.margin, std::fabs(std::min(d.d1, d.d2)));
      out.margin = std::min(out.margin, std::fabs(std::max(d.d1, d.d2)));
      if (intra_condition(g, seg.label)) {
        const double hi = std::min(break_even(g, forms.player1, seg.span.hi),
                                   break_even(g, forms.player2, seg.span.hi));
        if (hi > 0) {
          out.positive.push_back({CertificateKind::IntraCase, seg.label,
                                  seg.label,
                                  proposition_for(region, seg.label, seg.label),
                                  {0, hi}, +1});
        }
      }
      if (d.d1 < 0 && d.d2 < 0) {
        const double lo = std::max(break_even(g, forms.player1, seg.span.lo),
                                   break_even(g, forms.player2, seg.span.lo));
        if (lo < 0) {
          out.negative.push_back({CertificateKind::IntraCase, seg.label,
                                  seg.label, std::nullopt, {lo, 0}, -1});
        }
      }
      continue;
    }
    const double best = best_common_gain(g, forms, seg.span, base.u1, base.u2);
    out.margin = std::min(out.margin, std::fabs(best) / scale);
    const Interval both =
        intersect(seg.span, intersect(superlevel_interval(g, forms.player1, base.u1),
                                      superlevel_interval(g, forms.player2, base.u2)));
    if (both.empty()) continue;
    if (seg.span.lo >= 0) {
      out.positive.push_back({CertificateKind::InterCase, out.origin, seg.label,
                              proposition_for(region, out.origin, seg.label),
                              both, +1});
    } else {
      out.negative.push_back({CertificateKind::InterCase, out.origin, seg.label,
                              std::nullopt, both, -1});
    }
  }
  return out;
}

Certificate orient(Certificate c, bool swapped) {
  if (!swapped) return c;
  c.from = mirror(c.from);
  c.to = mirror(c.to);
  c.interval = {-c.interval.hi, -c.interval.lo};
  c.direction = -c.direction;
  return c;
}

std::vector<Certificate> orient_all(const std::vector<Certificate>& cs,
                                    bool swapped) {
  std::vector<Certificate> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(orient(c, swapped));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.interval.lo < b.interval.lo;
  });
  return out;
}

void require_interior(const GameInstance& g) {
  validate(g);
  if (on_case_boundary(g)) {
    throw OnCaseBoundary("game lies on a case boundary");
  }
}

}  // namespace

std::optional<Certificate> intra_case_beneficial(const GameInstance& g) {
  require_interior(g);
  const auto cg = canonicalize(g);
  for (const auto& c : analyze(cg.game).positive) {
    if (c.kind == CertificateKind::IntraCase) return orient(c, cg.swapped);
  }
  return std::nullopt;
}

std::vector<Certificate> inter_case_beneficial(const GameInstance& g) {
  require_interior(g);
  const auto cg = canonicalize(g);
  std::vector<Certificate> inter;
  for (const auto& c : analyze(cg.game).positive) {
    if (c.kind == CertificateKind::InterCase) inter.push_back(c);
  }
  return orient_all(inter, cg.swapped);
}

std::vector<Interval> opposite_direction_gains(const GameInstance& g) {
  require_interior(g);
  const auto cg = canonicalize(g);
  std::vector<Interval> out;
  for (const auto& c : orient_all(analyze(cg.game).negative, cg.swapped)) {
    out.push_back(c.interval);
  }
  return out;
}

GvResult in_gv(const GameInstance& g) {
  validate(g);
  GvResult r;
  const auto cg = canonicalize(g);
  const auto& c = cg.game;
  if (c.phi1 * c.x2 == c.phi2 * c.x1) {
    r.on_boundary = true;
    return r;
  }
  if (on_case_boundary(c)) {
    r.on_boundary = true;
    r.member = !search_valuation(g, 20001).empty();
    return r;
  }
  auto a = analyze(c);
  std::vector<Certificate> all = a.positive;
  all.insert(all.end(), a.negative.begin(), a.negative.end());
  r.certificates = orient_all(all, cg.swapped);
  r.member = !r.certificates.empty();
  r.margin = a.margin;
  return r;
}

int valuation_direction(const GameInstance& g) {
  if (!in_gv(g).member) throw NotInGv();
  return g.phi1 * g.x2 > g.phi2 * g.x1 ? +1 : -1;
}

bool in_gb(const GameInstance& g, std::size_t n) {
  return !search_budget(g, n).empty();
}

bool in_measure_zero_joint(const GameInstance& g, double tol) {
  validate(g);
  const auto c = canonicalize(g).game;
  const double p1 = c.phi1, p2 = c.phi2, x1 = c.x1, x2 = c.x2;
  auto close = [tol](double a, double b) {
    return std::fabs(a - b) <=
           tol * std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  if (close(p1 * x2, p2 * x1)) return true;
  const double s = std::sqrt(p1 * x1 * x2 / p2);
  if (close(s, 1) || close(s, 1 - x2)) return true;
  const auto label = origin_case(c);
  if (label == CaseLabel::C2a && p1 != p2 &&
      close(p1 * (1 - 2 * x2) / (p1 - p2), x1 / (x1 + x2))) {
    return true;
  }
  if (label == CaseLabel::C3 && p1 != p2 && close(p1 / p2, 3) &&
      close(x2, 4 * p1 * p2 * x1 / ((p1 - p2) * (p1 - p2)))) {
    return true;
  }
  return false;
}

std::optional<JointDirection> joint_beneficial_direction(const GameInstance& g) {
  validate(g);
  if (on_case_boundary(g)) return std::nullopt;
  const auto grads = joint_gradients(g);
  const auto& g1 = grads.player1;
  const auto& g2 = grads.player2;
  const double n1 = std::hypot(g1.d_b, g1.d_v);
  const double n2 = std::hypot(g2.d_b, g2.d_v);
  if (n1 == 0 || n2 == 0) return std::nullopt;
  double db = g1.d_b / n1 + g2.d_b / n2;
  double dv = g1.d_v / n1 + g2.d_v / n2;
  const double nd = std::hypot(db, dv);
  if (nd <= 1e-12) return std::nullopt;
  db /= nd;
  dv /= nd;
  if (!(g1.d_b * db + g1.d_v * dv > 0) || !(g2.d_b * db + g2.d_v * dv > 0)) {
    return std::nullopt;
  }
  double step = 1e-4 * std::min({g.phi1, g.phi2, g.x1, g.x2});
  for (int i = 0; i <= 40; ++i, step *= 0.5) {
    const TransferPair t{step * dv, step * db};
    const auto d = payoff_deltas(g, t);
    if (d.mutually_beneficial()) return JointDirection{db, dv, t, d};
  }
  return std::nullopt;
}

MembershipRecord membership(const GameInstance& g,
                            const MembershipOptions& opts) {
  validate(g);
  MembershipRecord m;
  auto gv = in_gv(g);
  m.in_gv = gv.member;
  m.certificates = std::move(gv.certificates);
  m.margin = gv.margin;
  m.near_boundary = gv.on_boundary || gv.margin <= 1e-9;
  m.in_gb = in_gb(g, opts.gb_grid);
  m.in_measure_zero = in_measure_zero_joint(g, opts.measure_zero_tol);
  if (!m.in_measure_zero) m.joint_direction = joint_beneficial_direction(g);
  m.joint_feasible = m.joint_direction.has_value();
  m.case_label = origin_case(g);
  m.region = budget_region(g);
  return m;
}

}  // namespace blotto
