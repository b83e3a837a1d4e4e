// Copyright 2026 The dynsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite: evaluates every reproduction criterion and prints one
// PASS/FAIL line per criterion. Criteria backed by long sweeps read the CSVs
// written by scripts/run_sweeps.sh and check that their manifests match the
// committed configs before using them.
//
//   dynsyn_acceptance [--root DIR] [--only N,...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include "json.hpp"

#include "dynsyn/config.h"
#include "dynsyn/experiments.h"
#include "dynsyn/fss.h"
#include "dynsyn/parallel.h"
#include "dynsyn/rng.h"
#include "dynsyn/stats.h"
#include "dynsyn/stochastic_model.h"
#include "testing/selfcheck.h"

namespace {

namespace fs = std::filesystem;
using namespace dynsyn;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  /// Wall-clock limit for criteria evaluated here; 0 when the cost sits in a sweep.
  double limit_s;
  std::function<Verdict()> run;
};

fs::path g_root;

std::string fmt(double v, int precision = 4) {
  std::ostringstream o;
  o << std::setprecision(precision) << v;
  return o.str();
}

fs::path under_root(const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : g_root / p; }

// Loads a sweep's rows after checking that its manifest belongs to the
// committed config and that every cell finished.
std::vector<ResultRow> load_sweep(const std::string& name, SweepConfig* config_out = nullptr,
                                  double* wall_out = nullptr) {
  const SweepConfig config = load_config((g_root / "configs" / (name + ".cfg")).string());
  const fs::path csv = g_root / "results" / (name + ".csv");
  const fs::path manifest_path = csv.string() + ".manifest.json";
  if (!fs::exists(csv) || !fs::exists(manifest_path)) {
    throw std::runtime_error("results/" + name + ".csv missing; run scripts/run_sweeps.sh");
  }
  std::ifstream min(manifest_path);
  const nlohmann::json manifest = nlohmann::json::parse(min);
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << config.hash();
  if (manifest.value("config_hash", "") != hash.str()) {
    throw std::runtime_error("results/" + name + ".csv was produced by a different config");
  }
  const size_t expected = sweep_cells(config).size();
  if (manifest["cells"].size() != expected) {
    throw std::runtime_error("results/" + name + ".csv is incomplete (" + std::to_string(manifest["cells"].size()) +
                             " of " + std::to_string(expected) + " cells); rerun scripts/run_sweeps.sh");
  }
  double wall = 0;
  for (const auto& c : manifest["cells"]) wall += c["wall_time_s"].get<double>();
  std::ifstream in(csv);
  if (config_out) *config_out = config;
  if (wall_out) *wall_out = wall;
  return read_rows(in);
}

CollapseRun collapse_from(const std::string& fit_name) {
  SweepConfig c = load_config((g_root / "configs" / (fit_name + ".cfg")).string());
  c.validate();
  std::ifstream in(under_root(c.input));
  if (!in) throw std::runtime_error(c.input + " missing; run scripts/run_sweeps.sh");
  return collapse_rows(c, read_rows(in), 1);
}

std::string describe(const CollapseResult& r) {
  return "p_c=" + fmt(r.p_c) + "(" + fmt(r.p_c_err, 2) + ") nu=" + fmt(r.nu) + "(" + fmt(r.nu_err, 2) +
         ") eps_min=" + fmt(r.eps_min, 3) + (r.on_boundary ? " [boundary]" : "");
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

std::string hours(double s) { return fmt(s / 3600, 3) + " h"; }

// Curve of one observable against one control parameter.
using Curve = std::map<double, std::pair<double, double>>;  // control -> (value, stderr)

Curve curve(const std::vector<ResultRow>& rows, uint32_t L, const std::string& depth_rule, const std::string& obs,
            bool control_is_p_m) {
  Curve c;
  for (const ResultRow& r : rows) {
    if (r.L == L && r.depth_rule == depth_rule && r.observable == obs) {
      c[control_is_p_m ? r.p_m : r.p_u] = {r.value, r.std_error};
    }
  }
  return c;
}

// Control value where a decreasing curve first falls through 1/2.
std::optional<double> half_point(const Curve& c) {
  auto prev = c.begin();
  if (prev == c.end()) return std::nullopt;
  if (prev->second.first < 0.5) return prev->first;
  for (auto it = std::next(prev); it != c.end(); prev = it++) {
    const double a = prev->second.first, b = it->second.first;
    if (a >= 0.5 && b < 0.5) return prev->first + (a - 0.5) / (a - b) * (it->first - prev->first);
  }
  return std::nullopt;
}

// Crossing of two curves on a shared grid: the sign change of (big - small)
// with the largest swing, restricted to points where either curve is in (0.02, 0.98).
std::optional<double> crossing(const Curve& small, const Curve& big) {
  std::vector<std::pair<double, double>> diffs;
  for (const auto& [p, v] : small) {
    const auto it = big.find(p);
    if (it == big.end()) continue;
    const double a = v.first, b = it->second.first;
    if (std::max(a, b) < 0.02 || std::min(a, b) > 0.98) continue;
    diffs.emplace_back(p, b - a);
  }
  std::optional<double> best;
  double best_swing = 0;
  for (size_t k = 0; k + 1 < diffs.size(); ++k) {
    const auto [p0, d0] = diffs[k];
    const auto [p1, d1] = diffs[k + 1];
    if (d0 > 0 && d1 <= 0 && d0 - d1 > best_swing) {
      best_swing = d0 - d1;
      best = p0 + d0 / (d0 - d1) * (p1 - p0);
    }
  }
  return best;
}

// 1. Tableau against the dense state vector.
Verdict tableau_oracle() {
  const auto r = testing::check_tableau_oracle(500, 20240101);
  return {r.passed, r.detail};
}

// 2. Conjugation table against the 4x4 matrix.
Verdict conjugation() {
  const auto r = testing::check_conjugation_table();
  return {r.passed, r.detail};
}

// 3. Closed forms against direct simulation on a 5 x 5 x 5 grid, and the harmonic approximation.
Verdict stochastic_consistency() {
  std::istringstream in(
      "experiment = stochastic\nP = 0.05, 0.15, 0.3, 0.5, 0.8\nmodel_L = 4, 16, 64, 256, 1024\n"
      "model_T = 2, 5, 10, 20, 40\nsamples = 100000\nseed = 20240103\n");
  const StochasticTable t = stochastic_table(parse_config(in, "criterion-3"), 1);
  size_t flagged = 0;
  double worst_z = 0;
  for (const auto& r : t.rows) {
    flagged += r.flagged ? 1 : 0;
    worst_z = std::max({worst_z, std::abs(r.d_z), std::abs(r.tr_z)});
  }
  double worst_harmonic = 0;
  size_t n_harmonic = 0;
  for (int k = 1; k <= 18; ++k) {
    const double P = 0.05 * k;
    for (uint64_t L : {32ull, 64ull, 256ull, 1024ull, 4096ull, 1ull << 16}) {
      const double exact = mean_Tr(P, L, MeanMode::ExactSum);
      worst_harmonic = std::max(worst_harmonic, std::abs(mean_Tr(P, L, MeanMode::HarmonicApprox) - exact) / exact);
      ++n_harmonic;
    }
  }
  return {flagged == 0 && worst_harmonic < 0.02,
          std::to_string(t.rows.size()) + " grid rows, " + std::to_string(flagged) + " beyond 3 sigma (max |z| " +
              fmt(worst_z, 3) + "); harmonic vs exact max rel. dev. " + fmt(100 * worst_harmonic, 3) + "% over " +
              std::to_string(n_harmonic) + " (P, L >= 32)"};
}

// 4. Finite-L decodability against G at a = 1, L = 2^18.
Verdict criticality() {
  const uint64_t L = 1ull << 18;
  const int T = 18;
  double worst = 0, at = 0;
  for (int k = 0; k <= 4000; ++k) {
    const double x = -2 + 4.0 * k / 4000;
    const double d = std::abs(closed_form_decodability(0.5 + x / T, L, T) - universal_G(x, 1));
    if (d > worst) {
      worst = d;
      at = x;
    }
  }
  return {worst < 0.02, "sup |D - G| = " + fmt(worst, 3) + " at x = " + fmt(at, 3) + " (P_c = " +
                            fmt(critical_params(1).P_c) + ")"};
}

// 5. I_3 collapse at p_u = 0.9.
Verdict miet() {
  SweepConfig sweep;
  double wall = 0;
  load_sweep("miet", &sweep, &wall);
  const CollapseRun run = collapse_from("miet_fit");
  const CollapseResult& r = run.result;
  const std::set<uint32_t> sizes(run.sizes.begin(), run.sizes.end());
  const bool setup_ok = sweep.trajectories >= 2000 && sizes == std::set<uint32_t>{32, 64, 128, 192};
  return {setup_ok && in_band(r.p_c, 0.49, 0.65) && in_band(r.nu, 2.5, 4.1) && wall < 12 * 3600,
          describe(r) + "; " + std::to_string(sweep.trajectories) + " trajectories/point, sweep " + hours(wall)};
}

// 6. Mean randomization depth against log2 L.
Verdict mean_depth() {
  double wall = 0;
  const auto rows = load_sweep("mean_tr", nullptr, &wall);
  std::map<double, std::vector<const ResultRow*>> by_pm;
  for (const ResultRow& r : rows) {
    if (r.observable == "Tr_mean" && r.L >= 64 && r.L <= 512) by_pm[r.p_m].push_back(&r);
  }
  std::ostringstream detail;
  bool ok = by_pm.size() >= 3;
  std::vector<double> pms, slopes, slope_errs;
  for (const auto& [pm, pts] : by_pm) {
    std::vector<double> x, y, s;
    for (const ResultRow* r : pts) {
      x.push_back(std::log2(r->L));
      y.push_back(r->value);
      s.push_back(r->std_error);
    }
    const LinearFit fit = weighted_linear_fit(x, y, s);
    ok = ok && fit.r_squared > 0.99;
    pms.push_back(pm);
    slopes.push_back(fit.slope);
    slope_errs.push_back(fit.slope_err);
    detail << "p_m=" << pm << ": a=" << fmt(fit.slope) << "(" << fmt(fit.slope_err, 2) << ") R2=" << fmt(fit.r_squared)
           << "; ";
  }
  for (size_t k = 1; k < slopes.size(); ++k) ok = ok && slopes[k] < slopes[k - 1];
  const LogCoefficientFit lc = fit_log_coefficient(pms, slopes, slope_errs);
  const bool form_ok = lc.a > 0 && lc.beta > 0 && std::isfinite(lc.chi2) && lc.chi2 < 4.0 * pms.size();
  detail << "c - a/ln(1-p^beta): c=" << fmt(lc.c) << " a=" << fmt(lc.a) << " beta=" << fmt(lc.beta)
         << " chi2=" << fmt(lc.chi2, 2) << "; sweep " << hours(wall);
  return {ok && form_ok && wall < 2 * 3600, detail.str()};
}

// 7. Decodability regimes at constant, logarithmic and linear depth.
Verdict dt_regimes() {
  SweepConfig sweep;
  double wall = 0;
  const auto rows = load_sweep("dt_regimes", &sweep, &wall);
  std::ostringstream detail;
  bool ok = true;
  auto thresholds = [&](const std::string& rule) {
    std::vector<double> t;
    for (uint32_t L : sweep.sizes) {
      const auto h = half_point(curve(rows, L, rule, "D", true));
      t.push_back(h ? *h : NAN);
    }
    return t;
  };
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ",") + (std::isnan(x) ? std::string("none") : fmt(x, 3));
    return s;
  };
  const auto t16 = thresholds("const:16");
  const auto tlin = thresholds("linear:0.25");
  for (size_t k = 1; k < t16.size(); ++k) ok = ok && t16[k] > t16[k - 1];
  for (size_t k = 1; k < tlin.size(); ++k) ok = ok && tlin[k] < tlin[k - 1];
  ok = ok && tlin.back() < 0.25 * tlin.front();
  detail << "T=16 thresholds " << list(t16) << "; T=L/4 thresholds " << list(tlin) << "; T=2log2L crossings ";
  std::vector<double> cross;
  for (size_t k = 1; k < sweep.sizes.size(); ++k) {
    const auto c = crossing(curve(rows, sweep.sizes[k - 1], "log2:2", "D", true),
                            curve(rows, sweep.sizes[k], "log2:2", "D", true));
    cross.push_back(c ? *c : NAN);
    ok = ok && c && in_band(*c, 0.01, 0.05);
  }
  detail << list(cross) << "; sweep " << hours(wall);
  return {ok && wall < 4 * 3600, detail.str()};
}

// 8. Known-location collapse against p_u at p_m = 0.7.
Verdict kl_collapse() {
  double wall = 0;
  load_sweep("kl_collapse", nullptr, &wall);
  const CollapseResult r = collapse_from("kl_collapse_fit").result;
  return {in_band(r.p_c, 0.49, 0.54) && in_band(r.nu, 0.7, 1.3) && !r.on_boundary && wall < 4 * 3600,
          describe(r) + "; sweep " + hours(wall)};
}

// 9. Unknown-location transition at p_m = 1, 0.5 and 0.1.
Verdict ul_transition() {
  double wall_total = 0;
  std::vector<CollapseResult> fits;
  std::ostringstream detail;
  for (const char* name : {"ul_pm1", "ul_pm05", "ul_pm01"}) {
    SweepConfig sweep;
    double wall = 0;
    load_sweep(name, &sweep, &wall);
    wall_total += wall;
    fits.push_back(collapse_from(std::string(name) + "_fit").result);
    detail << "p_m=" << sweep.p_m.front() << ": " << describe(fits.back()) << "; ";
  }
  double lo = 1, hi = 0, band_lo = 1, band_hi = 0;
  for (const auto& f : fits) {
    lo = std::min(lo, f.p_c);
    hi = std::max(hi, f.p_c);
    band_lo = std::min(band_lo, f.p_c - f.p_c_err);
    band_hi = std::max(band_hi, f.p_c + f.p_c_err);
  }
  const double analytic = ul_threshold(1);
  detail << "spread " << fmt(hi - lo, 3) << "; analytic " << fmt(analytic) << " vs band [" << fmt(band_lo) << ", "
         << fmt(band_hi) << "]; sweeps " << hours(wall_total);
  const bool ok = in_band(fits[0].p_c, 0.27, 0.34) && hi - lo < 0.02 && in_band(analytic, band_lo, band_hi) &&
                  wall_total < 4 * 3600;
  return {ok, detail.str()};
}

// 10. Square-lattice decodability at p_u = 0.35, T = 2 log2 L.
Verdict dt_2d() {
  SweepConfig sweep;
  double wall = 0;
  const auto rows = load_sweep("dt_2d", &sweep, &wall);
  std::string cross;
  bool crosses = true;
  for (size_t k = 1; k < sweep.sizes.size(); ++k) {
    const auto c = crossing(curve(rows, sweep.sizes[k - 1], "log2:2", "D", true),
                            curve(rows, sweep.sizes[k], "log2:2", "D", true));
    crosses = crosses && c.has_value();
    cross += (cross.empty() ? "" : ",") + (c ? fmt(*c, 3) : std::string("none"));
  }
  const CollapseResult r = collapse_from("dt_2d_fit").result;
  return {crosses && in_band(r.p_c, 0.03, 0.10) && wall < 6 * 3600,
          "crossings " + cross + "; " + describe(r) + "; sweep " + hours(wall)};
}

// 11. Round trip of the collapse on noisy samples of G.
Verdict fss_round_trip() {
  const int n_seeds = 100;
  std::vector<int> hit(n_seeds, 0);
  std::vector<double> eps(n_seeds, 0);
  parallel_for(n_seeds, 1, [&](size_t s) {
    std::mt19937_64 rng(derive_seed(20240111, {s}));
    std::normal_distribution<double> noise(0, 0.01);
    std::vector<CollapsePoint> pts;
    for (int T = 6; T <= 10; ++T) {
      for (int k = 0; k <= 16; ++k) {
        const double P = 0.3 + 0.025 * k;
        pts.push_back({P, static_cast<double>(T), universal_G((P - 0.5) * T, 1) + noise(rng), 0.01});
      }
    }
    const SearchBox box{0.3, 0.7, 0.3, 3.0, 41, 200};
    const CollapseResult r = minimize(pts, box, {-1e300, 0, 1e300, 0, 1}, s);
    hit[s] = std::abs(r.p_c - 0.5) <= r.p_c_err && std::abs(r.nu - 1.0) <= r.nu_err;
    eps[s] = r.eps_min;
  });
  const int hits = std::accumulate(hit.begin(), hit.end(), 0);
  std::sort(eps.begin(), eps.end());
  return {hits >= 95, std::to_string(hits) + "/" + std::to_string(n_seeds) +
                          " seeds recover (P_c, nu) = (0.5, 1) within the 2 eps_min box; median eps_min " +
                          fmt(eps[n_seeds / 2], 3)};
}

// 12. Property suites, exactly as run by `dynsyn selfcheck`.
Verdict property_suites() {
  const fs::path scratch = fs::temp_directory_path() / "dynsyn-acceptance-selfcheck";
  fs::remove_all(scratch);
  bool ok = true;
  std::string failed;
  for (const auto& r : testing::run_selfcheck(scratch.string())) {
    ok = ok && r.passed;
    if (!r.passed) failed += r.name + ": " + r.detail + "; ";
  }
  fs::remove_all(scratch);
  return {ok, ok ? "color algebra, monotonicity, entropy, logical replay, oracle and worker-invariance suites green"
                 : failed};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproduction acceptance criteria"};
  std::string root = DYNSYN_SOURCE_DIR;
  std::vector<int> only;
  app.add_option("--root", root, "repository root holding configs/ and results/");
  app.add_option("--only", only, "criterion numbers to run")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  g_root = root;

  const std::vector<Criterion> criteria = {
      {1, "tableau oracle equivalence", 60, tableau_oracle},
      {2, "gate conjugation table", 1, conjugation},
      {3, "stochastic-model consistency", 120, stochastic_consistency},
      {4, "stochastic-model criticality", 10, criticality},
      {5, "MIET collapse", 0, miet},
      {6, "mean randomization depth scaling", 0, mean_depth},
      {7, "decodability regimes", 0, dt_regimes},
      {8, "known-location collapse", 0, kl_collapse},
      {9, "unknown-location transition", 0, ul_transition},
      {10, "2D decodability", 0, dt_2d},
      {11, "collapse round trip", 300, fss_round_trip},
      {12, "property suites", 300, property_suites},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      v.pass = false;
      v.detail += "; exceeded the " + fmt(c.limit_s) + " s budget";
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.name << ": " << v.detail
              << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
