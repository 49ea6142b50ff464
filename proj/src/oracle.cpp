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

#include "blotto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "blotto/parallel.hpp"
#include "blotto/sampling.hpp"

namespace blotto {

Interval FeasibleIntervals::interval(std::size_t i) const {
  const auto& r = runs.at(i);
  return {std::max(domain_lo, r.first - 0.5 * grid_step),
          std::min(domain_hi, r.last + 0.5 * grid_step)};
}

std::vector<Interval> FeasibleIntervals::intervals() const {
  std::vector<Interval> out;
  out.reserve(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) out.push_back(interval(i));
  return out;
}

namespace {

template <class MakeTransfer>
FeasibleIntervals line_search(const GameInstance& g, double lo, double hi,
                              std::size_t n, MakeTransfer make) {
  if (n < 1001) throw std::invalid_argument("oracle grid needs n >= 1001");
  validate(g);
  FeasibleIntervals out;
  out.domain_lo = lo;
  out.domain_hi = hi;
  out.grid_step = (hi - lo) / static_cast<double>(n + 1);
  const auto base = player_payoffs(PostTransferGame::at_origin(g));
  bool open = false;
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = lo + static_cast<double>(k) * out.grid_step;
    const auto u = player_payoffs(g, make(t));
    const bool hit = u.u1 - base.u1 > 0 && u.u2 - base.u2 > 0;
    if (hit && open) {
      out.runs.back().last = t;
    } else if (hit) {
      out.runs.push_back({t, t});
    }
    open = hit;
  }
  return out;
}

}  // namespace

FeasibleIntervals search_valuation(const GameInstance& g, std::size_t n) {
  return line_search(g, -g.phi2, g.phi1, n,
                     [](double t) { return TransferPair{t, 0}; });
}

FeasibleIntervals search_budget(const GameInstance& g, std::size_t n) {
  return line_search(g, -g.x1, g.x2, n,
                     [](double t) { return TransferPair{0, t}; });
}

std::optional<JointHit> search_joint(const GameInstance& g, std::size_t n_b,
                                     std::size_t n_v) {
  if (n_b < 101 || n_v < 101) {
    throw std::invalid_argument("joint grid needs sizes >= 101");
  }
  validate(g);
  const auto base = player_payoffs(PostTransferGame::at_origin(g));
  const double sb = (g.x1 + g.x2) / static_cast<double>(n_b + 1);
  const double sv = (g.phi1 + g.phi2) / static_cast<double>(n_v + 1);
  std::optional<JointHit> best;
  double best_score = 0;
  for (std::size_t i = 1; i <= n_b; ++i) {
    const double tb = -g.x1 + static_cast<double>(i) * sb;
    for (std::size_t j = 1; j <= n_v; ++j) {
      const double tv = -g.phi2 + static_cast<double>(j) * sv;
      const TransferPair t{tv, tb};
      const auto u = player_payoffs(g, t);
      const PayoffDeltas d{u.u1 - base.u1, u.u2 - base.u2};
      if (!d.mutually_beneficial()) continue;
      const double score = std::min(d.delta1, d.delta2);
      if (!best || score > best_score) {
        best = JointHit{t, d};
        best_score = score;
      }
    }
  }
  return best;
}

namespace {

struct SampleOutcome {
  GameInstance game;
  bool excluded = false;
  bool gv_pred = false, gv_oracle = false;
  bool gb_pred = false, gb_oracle = false;
  bool joint_checked = false, joint_pred = false, joint_oracle = false;
  std::size_t direction_violations = 0;
};

SampleOutcome evaluate_sample(const GameInstance& g,
                              const AgreementOptions& opts) {
  SampleOutcome s;
  s.game = g;
  const auto gv = in_gv(g);
  const auto oracle = search_valuation(g, opts.valuation_grid);
  const double cross = g.phi1 * g.x2 - g.phi2 * g.x1;
  for (const auto& r : oracle.runs) {
    if ((cross > 0 && r.first < 0) || (cross < 0 && r.last > 0) || cross == 0) {
      ++s.direction_violations;
    }
  }
  s.excluded = gv.on_boundary || gv.margin <= opts.exclusion_margin;
  s.gv_pred = gv.member;
  s.gv_oracle = !oracle.empty();
  if (opts.check_budget) {
    s.gb_pred = in_gb(g, opts.budget_grid);
    s.gb_oracle = !search_budget(g, 2 * opts.budget_grid + 1).empty();
  }
  if (opts.check_joint && !in_measure_zero_joint(g)) {
    s.joint_checked = true;
    const auto dir = joint_beneficial_direction(g);
    s.joint_pred = dir.has_value();
    if (dir) {
      const auto u0 = player_payoffs(PostTransferGame::at_origin(g));
      const auto u = player_payoffs(g, dir->probe);
      s.joint_oracle = u.u1 > u0.u1 && u.u2 > u0.u2;
    } else {
      s.joint_oracle = search_joint(g, 201, 201).has_value();
    }
  }
  return s;
}

nlohmann::ordered_json game_json(const GameInstance& g) {
  return {{"phi1", g.phi1}, {"phi2", g.phi2}, {"x1", g.x1}, {"x2", g.x2}};
}

}  // namespace

AgreementReport agreement_report(std::size_t samples, std::uint64_t seed,
                                 const AgreementOptions& opts,
                                 std::size_t workers) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<SampleOutcome> outcomes(samples);
  parallel_for(samples, workers, [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    outcomes[i] = evaluate_sample(random_game(rng), opts);
  });

  AgreementReport rep;
  rep.samples = samples;
  rep.seed = seed;
  auto record = [&](std::size_t i, const char* what, bool pred, bool oracle,
                    std::size_t& agree, std::size_t& disagree) {
    if (pred == oracle) {
      ++agree;
      return;
    }
    ++disagree;
    rep.disagreements.push_back({i, what, outcomes[i].game, pred, oracle});
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& s = outcomes[i];
    rep.direction_violations += s.direction_violations;
    if (s.excluded) {
      ++rep.excluded;
    } else {
      record(i, "gv", s.gv_pred, s.gv_oracle, rep.gv_agree, rep.gv_disagree);
    }
    if (opts.check_budget) {
      record(i, "gb", s.gb_pred, s.gb_oracle, rep.gb_agree, rep.gb_disagree);
    }
    if (s.joint_checked) {
      record(i, "joint", s.joint_pred, s.joint_oracle, rep.joint_agree,
             rep.joint_disagree);
    }
  }
  return rep;
}

std::string AgreementReport::to_json() const {
  nlohmann::ordered_json j;
  j["samples"] = samples;
  j["seed"] = seed;
  j["boundary_excluded"] = excluded;
  j["gv"] = {{"agree", gv_agree}, {"disagree", gv_disagree}};
  j["gb"] = {{"agree", gb_agree}, {"disagree", gb_disagree}};
  j["joint"] = {{"agree", joint_agree}, {"disagree", joint_disagree}};
  j["direction_violations"] = direction_violations;
  auto list = nlohmann::ordered_json::array();
  for (const auto& d : disagreements) {
    list.push_back({{"index", d.index},
                    {"predicate", d.predicate},
                    {"game", game_json(d.game)},
                    {"predicate_verdict", d.predicate_verdict},
                    {"oracle_verdict", d.oracle_verdict}});
  }
  j["disagreements"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace blotto
