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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blotto/adversary.hpp"
#include "blotto/errors.hpp"
#include "blotto/oracle.hpp"
#include "blotto/payoffs.hpp"
#include "blotto/sampling.hpp"
#include "blotto/scan.hpp"
#include "blotto/transfers.hpp"
#include "json.hpp"

namespace {

using blotto::format_real;
using json = nlohmann::ordered_json;

constexpr int kUsageError = 2;
constexpr int kIoError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::string str(std::string_view s) { return std::string(s); }

json certificate_json(const blotto::Certificate& c) {
  json j;
  j["prop"] = c.proposition ? json(*c.proposition) : json(nullptr);
  j["kind"] = c.kind == blotto::CertificateKind::IntraCase ? "intra" : "inter";
  j["from"] = str(to_string(c.from));
  j["to"] = str(to_string(c.to));
  j["lo"] = c.interval.lo;
  j["hi"] = c.interval.hi;
  j["direction"] = c.direction;
  return j;
}

std::string check_report(const blotto::GameInstance& g, bool as_json) {
  const auto p = blotto::PostTransferGame::at_origin(g);
  const auto alloc = blotto::adversary_allocation(p);
  const auto u = blotto::player_payoffs(p);
  const auto m = blotto::membership(g);

  if (as_json) {
    json j;
    j["game"] = {{"phi1", g.phi1}, {"phi2", g.phi2}, {"x1", g.x1}, {"x2", g.x2}};
    j["case"] = str(to_string(m.case_label));
    j["region"] = str(to_string(m.region));
    j["allocation"] = {{"xa1", alloc.xa1}, {"xa2", alloc.xa2}};
    j["payoffs"] = {{"u1", u.u1}, {"u2", u.u2}};
    auto certs = json::array();
    for (const auto& c : m.certificates) certs.push_back(certificate_json(c));
    j["gv"] = {{"member", m.in_gv}, {"certificates", certs}};
    j["gb"] = m.in_gb;
    j["joint"] = m.joint_feasible;
    if (m.joint_direction) {
      j["joint_direction"] = {{"d_b", m.joint_direction->d_b},
                              {"d_v", m.joint_direction->d_v}};
    } else {
      j["joint_direction"] = nullptr;
    }
    j["measure_zero"] = m.in_measure_zero;
    j["near_boundary"] = m.near_boundary;
    return j.dump(2) + "\n";
  }

  std::string out;
  out += "game          phi1=" + format_real(g.phi1) + " phi2=" +
         format_real(g.phi2) + " x1=" + format_real(g.x1) +
         " x2=" + format_real(g.x2) + "\n";
  out += "case          " + str(to_string(m.case_label)) + "\n";
  out += "region        " + str(to_string(m.region)) + "\n";
  out += "allocation    xa1=" + format_real(alloc.xa1) +
         " xa2=" + format_real(alloc.xa2) + "\n";
  out += "payoffs       u1=" + format_real(u.u1) + " u2=" + format_real(u.u2) +
         "\n";
  out += std::string("gv            ") + (m.in_gv ? "true" : "false") + "\n";
  for (const auto& c : m.certificates) {
    out += "  certificate " +
           (c.proposition ? "prop " + std::to_string(*c.proposition)
                          : std::string("supplementary")) +
           " " + str(to_string(c.from)) + "->" + str(to_string(c.to)) + " (" +
           format_real(c.interval.lo) + ", " + format_real(c.interval.hi) +
           ") direction " + (c.direction > 0 ? "+" : "-") + "\n";
  }
  out += std::string("gb            ") + (m.in_gb ? "true" : "false") + "\n";
  out += std::string("joint         ") + (m.joint_feasible ? "true" : "false");
  if (m.joint_direction) {
    out += " direction (d_b=" + format_real(m.joint_direction->d_b) +
           ", d_v=" + format_real(m.joint_direction->d_v) + ")";
  }
  out += "\n";
  out += std::string("measure_zero  ") + (m.in_measure_zero ? "true" : "false") +
         "\n";
  if (m.near_boundary) out += "note          verdict decided at a case boundary\n";
  return out;
}

std::string scan_svg(const std::vector<blotto::ScanRecord>& rows) {
  std::vector<blotto::SvgPoint> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) {
    const char* color = r.in_gv && r.in_gb ? "purple"
                        : r.in_gv          ? "blue"
                        : r.in_gb          ? "red"
                                           : "lightgray";
    pts.push_back({r.x1, r.x2, color});
  }
  return blotto::scatter_svg(pts, "x1", "x2");
}

std::string mc_svg(const std::vector<blotto::McRecord>& rows) {
  std::vector<blotto::SvgPoint> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) {
    pts.push_back({r.x1, r.x2, r.in_gv ? "black" : "lightgray"});
  }
  return blotto::scatter_svg(pts, "x1", "x2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalitional Blotto transfer analysis"};
  app.require_subcommand(1);

  std::vector<double> game_args;
  std::vector<double> phi_args;
  std::string out_path;
  std::string svg_path;
  bool as_json = false;
  std::uint64_t seed = blotto::kDefaultSeed;
  double step = 0.02;
  std::size_t workers = 1;
  std::size_t samples = 1000;
  std::size_t n = 2201;
  std::vector<double> x1_range{0, 3}, x2_range{0, 3};
  double from = 0, to = 0;

  auto* check = app.add_subcommand("check", "report on a single game");
  check->add_option("game", game_args, "phi1 phi2 x1 x2")->expected(4)->required();
  check->add_flag("--json", as_json, "machine-readable output");

  auto* scan = app.add_subcommand("scan", "membership over a budget grid");
  scan->add_option("phi", phi_args, "phi1 phi2")->expected(2)->required();
  scan->add_option("--x1", x1_range, "x1 range (lo, hi]")->expected(2);
  scan->add_option("--x2", x2_range, "x2 range (lo, hi]")->expected(2);
  scan->add_option("--step", step, "grid step")->capture_default_str();
  scan->add_option("--out", out_path, "CSV path (stdout if omitted)");
  scan->add_option("--svg", svg_path, "optional scatter plot path");
  scan->add_option("--workers", workers, "threads")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "payoff changes along tau_v");
  sweep->add_option("game", game_args, "phi1 phi2 x1 x2")->expected(4)->required();
  sweep->add_option("--from", from, "first tau_v");
  sweep->add_option("--to", to, "last tau_v");
  sweep->add_option("-n,--n", n, "number of points")->capture_default_str();
  sweep->add_option("--out", out_path, "CSV path (stdout if omitted)");

  auto* mc = app.add_subcommand("mc", "random budgets, valuation membership");
  mc->add_option("phi", phi_args, "phi1 phi2")->expected(2)->required();
  mc->add_option("--samples", samples, "sample count")->capture_default_str();
  mc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  mc->add_option("--x1", x1_range, "x1 range (lo, hi]")->expected(2);
  mc->add_option("--x2", x2_range, "x2 range (lo, hi]")->expected(2);
  mc->add_option("--out", out_path, "CSV path (stdout if omitted)");
  mc->add_option("--svg", svg_path, "optional scatter plot path");
  mc->add_option("--workers", workers, "threads")->capture_default_str();

  auto* agree = app.add_subcommand("agree", "predicate vs oracle report");
  agree->add_option("--samples", samples, "sample count")->capture_default_str();
  agree->add_option("--seed", seed, "RNG seed")->capture_default_str();
  agree->add_option("--out", out_path, "JSON path (stdout if omitted)");
  agree->add_option("--workers", workers, "threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*check) {
      const blotto::GameInstance g{game_args[0], game_args[1], game_args[2],
                                   game_args[3]};
      blotto::validate(g);
      emit("", check_report(g, as_json));
    } else if (*scan) {
      const auto rows = blotto::scan_plane(
          phi_args[0], phi_args[1], {x1_range[0], x1_range[1]},
          {x2_range[0], x2_range[1]}, step, {workers, {}});
      emit(out_path, blotto::scan_csv(rows));
      if (!svg_path.empty()) emit(svg_path, scan_svg(rows));
    } else if (*sweep) {
      const blotto::GameInstance g{game_args[0], game_args[1], game_args[2],
                                   game_args[3]};
      blotto::validate(g);
      if (sweep->count("--from") == 0) from = -g.phi2;
      if (sweep->count("--to") == 0) to = g.phi1;
      if (from < -g.phi2 || to > g.phi1 || !(from <= to)) {
        throw std::invalid_argument("tau range must lie within [-phi2, phi1]");
      }
      emit(out_path, blotto::sweep_csv(blotto::sweep_valuation(g, from, to, n)));
    } else if (*mc) {
      const auto rows = blotto::mc_sample(phi_args[0], phi_args[1], samples, seed,
                                          {x1_range[0], x1_range[1]},
                                          {x2_range[0], x2_range[1]}, workers);
      emit(out_path, blotto::mc_csv(rows));
      if (!svg_path.empty()) emit(svg_path, mc_svg(rows));
      (out_path.empty() ? std::cerr : std::cout)
          << blotto::summarize(rows).line() << "\n";
    } else if (*agree) {
      const auto rep = blotto::agreement_report(samples, seed, {}, workers);
      emit(out_path, rep.to_json());
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const blotto::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
