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


#include "dynsyn/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "dynsyn/decoders.h"
#include "dynsyn/entanglement.h"
#include "dynsyn/parallel.h"
#include "dynsyn/rng.h"
#include "dynsyn/stats.h"
#include "dynsyn/stochastic_model.h"
#include "json.hpp"

namespace dynsyn {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kColumns[] = {"experiment", "lattice", "L",     "p_u",    "p_m",       "depth_rule", "depth",
                                "family",     "observable", "value", "stderr", "n_samples", "seed",       "version"};

ResultRow base_row(const SweepConfig& config, const Cell& cell, uint64_t seed) {
  ResultRow row;
  row.experiment = experiment_name(config.experiment);
  row.lattice = lattice_name(config.lattice);
  row.L = cell.L;
  row.p_u = cell.p_u;
  row.p_m = cell.p_m;
  row.family = family_name(config.family);
  row.seed = seed;
  row.version = version_string();
  return row;
}

Geometry geometry_of(const SweepConfig& config, uint32_t L) { return {config.lattice, L}; }

std::vector<ResultRow> miet_cell(const SweepConfig& config, const Cell& cell, int workers) {
  const uint64_t seed = cell_seed(config, cell);
  const uint32_t L = cell.L;
  std::vector<int> depths;
  for (const DepthRule& rule : config.depths) depths.push_back(rule.evaluate(L));
  const int max_depth = *std::max_element(depths.begin(), depths.end());
  const ColoredTableau initial = ColoredTableau::initial_state(L, config.family, 0);

  struct Sample {
    int s_ab = 0;
    int i3 = 0;
  };
  // samples[i][r]: trajectory i measured at depth rule r.
  std::vector<std::vector<Sample>> samples(config.trajectories, std::vector<Sample>(depths.size()));
  parallel_for(config.trajectories, workers, [&](size_t i) {
    CircuitSampler sampler(geometry_of(config, L), cell.p_u, cell.p_m, derive_seed(seed, {i, 0}));
    Rng outcomes(derive_seed(seed, {i, 1}));
    ColoredTableau state = initial;
    CircuitStep step;
    for (int t = 1; t <= max_depth; ++t) {
      sampler.next(step);
      execute_step(state, step, outcomes);
      for (size_t r = 0; r < depths.size(); ++r) {
        if (depths[r] == t) {
          samples[i][r] = {half_chain_entropy(state), tripartite_mi(state)};
        }
      }
    }
  });

  std::vector<ResultRow> rows;
  for (size_t r = 0; r < depths.size(); ++r) {
    RunningStats s_ab, i3;
    for (const auto& traj : samples) {
      s_ab.add(traj[r].s_ab);
      i3.add(traj[r].i3);
    }
    ResultRow row = base_row(config, cell, seed);
    row.depth_rule = config.depths[r].str();
    row.depth = depths[r];
    row.n_samples = config.trajectories;
    auto emit = [&](const char* name, double value, double err) {
      row.observable = name;
      row.value = value;
      row.std_error = err;
      rows.push_back(row);
    };
    emit("S_AB", s_ab.mean(), s_ab.stderr_of_mean());
    emit("S_AB_nats", s_ab.mean() * kLn2, s_ab.stderr_of_mean() * kLn2);
    emit("I3", i3.mean(), i3.stderr_of_mean());
    emit("I3_nats", i3.mean() * kLn2, i3.stderr_of_mean() * kLn2);
  }
  return rows;
}

std::vector<ResultRow> dt_kl_cell(const SweepConfig& config, const Cell& cell, int workers) {
  const uint64_t seed = cell_seed(config, cell);
  EnsembleSetup setup{geometry_of(config, cell.L), config.depths.front(), cell.p_u, cell.p_m, config.family};
  std::vector<int> depths;
  for (const DepthRule& rule : config.depths) depths.push_back(rule.evaluate(cell.L));
  const auto estimates = kl_decodability_at(setup, depths, config.trajectories, seed, workers);
  std::vector<ResultRow> rows;
  for (size_t r = 0; r < depths.size(); ++r) {
    ResultRow row = base_row(config, cell, seed);
    row.depth_rule = config.depths[r].str();
    row.depth = depths[r];
    row.observable = "D";
    row.value = estimates[r].value;
    row.std_error = estimates[r].std_error;
    row.n_samples = estimates[r].n_samples;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> dt_ul_cell(const SweepConfig& config, const Cell& cell, int workers) {
  const uint64_t seed = cell_seed(config, cell);
  std::vector<ResultRow> rows;
  for (size_t r = 0; r < config.depths.size(); ++r) {
    EnsembleSetup setup{geometry_of(config, cell.L), config.depths[r], cell.p_u, cell.p_m, config.family};
    const UlEstimate est =
        ul_decodability(setup, config.unitary_configs, config.meas_realizations, derive_seed(seed, {r}), workers);
    ResultRow row = base_row(config, cell, seed);
    row.depth_rule = config.depths[r].str();
    row.depth = est.decodability.depth_steps;
    row.observable = "D";
    row.value = est.decodability.value;
    row.std_error = est.decodability.std_error;
    row.n_samples = est.decodability.n_samples;
    rows.push_back(row);
    const uint64_t n_weights = config.unitary_configs * setup.geometry.num_sites();
    row.observable = "negative_weight_fraction";
    row.value = static_cast<double>(est.n_negative_weights) / static_cast<double>(n_weights);
    row.std_error = binomial_stderr(est.n_negative_weights, n_weights);
    row.n_samples = n_weights;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> mean_tr_cell(const SweepConfig& config, const Cell& cell, int workers) {
  const uint64_t seed = cell_seed(config, cell);
  const MeanDepthResult result = mean_randomization_depth(config.lattice, cell.p_u, cell.p_m, config.sizes,
                                                          config.trajectories, seed, workers, config.depth_cap,
                                                          config.fit_min_size);
  const DepthRule cap = DepthRule::log(config.depth_cap);
  std::vector<ResultRow> rows;
  for (const MeanDepthPoint& p : result.points) {
    ResultRow row = base_row(config, cell, seed);
    row.L = p.linear_size;
    row.depth_rule = cap.str();
    row.depth = cap.evaluate(p.linear_size);
    row.observable = "Tr_mean";
    row.value = p.mean;
    row.std_error = p.std_error;
    row.n_samples = p.n_used;
    rows.push_back(row);
    const uint64_t total = p.n_used + p.n_censored;
    row.observable = "censored_fraction";
    row.value = static_cast<double>(p.n_censored) / static_cast<double>(total);
    row.std_error = binomial_stderr(p.n_censored, total);
    row.n_samples = total;
    rows.push_back(row);
  }
  ResultRow fit = base_row(config, cell, seed);
  fit.L = 0;
  fit.depth_rule = cap.str();
  fit.n_samples = result.points.size();
  auto emit = [&](const char* name, double value, double err) {
    fit.observable = name;
    fit.value = value;
    fit.std_error = err;
    rows.push_back(fit);
  };
  emit("Tr_fit_a", result.a, result.a_err);
  emit("Tr_fit_b", result.b, result.b_err);
  emit("Tr_fit_r2", result.r_squared, 0.0);
  return rows;
}

double parse_csv_double(const std::string& s, const std::string& column, size_t line) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw CsvError("line " + std::to_string(line) + ": column '" + column + "' is not a number: '" + s + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  fs::rename(tmp, path);
}

bool contains(const std::vector<double>& v, double x) {
  return std::any_of(v.begin(), v.end(), [x](double y) { return std::abs(x - y) < 1e-12; });
}

std::string hex64(uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

const char* version_string() { return DYNSYN_VERSION; }

std::string csv_header() {
  std::string out;
  for (const char* c : kColumns) {
    if (!out.empty()) out += ",";
    out += c;
  }
  return out;
}

std::string csv_line(const ResultRow& r) {
  std::ostringstream o;
  o << r.experiment << "," << r.lattice << "," << r.L << "," << format_double(r.p_u) << "," << format_double(r.p_m)
    << "," << r.depth_rule << "," << r.depth << "," << r.family << "," << r.observable << ","
    << format_double(r.value) << "," << format_double(r.std_error) << "," << r.n_samples << "," << r.seed << ","
    << r.version;
  return o.str();
}

std::vector<ResultRow> read_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvError("empty CSV input");
  }
  const auto header = split_csv(line);
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < header.size(); ++i) index[header[i]] = i;
  std::vector<std::string> missing;
  for (const char* c : kColumns) {
    if (!index.count(c)) missing.emplace_back(c);
  }
  if (!missing.empty()) {
    std::string msg = "CSV header lacks column(s):";
    for (const auto& m : missing) msg += " " + m;
    throw CsvError(msg);
  }
  std::vector<ResultRow> rows;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      throw CsvError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                     " fields, got " + std::to_string(f.size()));
    }
    auto get = [&](const char* c) { return f[index[c]]; };
    auto num = [&](const char* c) { return parse_csv_double(get(c), c, lineno); };
    ResultRow r;
    r.experiment = get("experiment");
    r.lattice = get("lattice");
    r.L = static_cast<uint32_t>(num("L"));
    r.p_u = num("p_u");
    r.p_m = num("p_m");
    r.depth_rule = get("depth_rule");
    r.depth = static_cast<int>(num("depth"));
    r.family = get("family");
    r.observable = get("observable");
    r.value = num("value");
    r.std_error = num("stderr");
    r.n_samples = static_cast<uint64_t>(num("n_samples"));
    r.seed = std::stoull(get("seed"));
    r.version = get("version");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string Cell::key() const {
  return "L=" + std::to_string(L) + ";p_u=" + format_double(p_u) + ";p_m=" + format_double(p_m);
}

std::vector<Cell> sweep_cells(const SweepConfig& config) {
  std::vector<Cell> cells;
  if (config.experiment == Experiment::MeanTr) {
    for (double pu : config.p_u)
      for (double pm : config.p_m) cells.push_back({0, pu, pm});
    return cells;
  }
  for (uint32_t L : config.sizes)
    for (double pu : config.p_u)
      for (double pm : config.p_m) cells.push_back({L, pu, pm});
  return cells;
}

uint64_t cell_seed(const SweepConfig& config, const Cell& cell) {
  if (!config.seed) {
    throw ConfigError("seed: required");
  }
  return derive_seed(*config.seed,
                     {fnv1a64(experiment_name(config.experiment)), static_cast<uint64_t>(config.lattice), cell.L,
                      seed_key(cell.p_u), seed_key(cell.p_m), fnv1a64(family_name(config.family))});
}

std::vector<ResultRow> run_cell(const SweepConfig& config, const Cell& cell, int workers) {
  switch (config.experiment) {
    case Experiment::Miet: return miet_cell(config, cell, workers);
    case Experiment::DtKl: return dt_kl_cell(config, cell, workers);
    case Experiment::DtUl: return dt_ul_cell(config, cell, workers);
    case Experiment::MeanTr: return mean_tr_cell(config, cell, workers);
    default: throw ConfigError("experiment: not a circuit sweep");
  }
}

SweepSummary run_sweep(const SweepConfig& config, const SweepOptions& options) {
  config.validate();
  if (options.out.empty()) {
    throw ConfigError("out: an output path is required");
  }
  const std::string manifest_path = options.out + ".manifest.json";
  const std::vector<Cell> cells = sweep_cells(config);
  SweepSummary summary;
  summary.cells_total = cells.size();

  json manifest;
  std::set<std::string> done;
  if (options.resume) {
    if (!fs::exists(options.out) || !fs::exists(manifest_path)) {
      throw ResumeConflict("--resume: " + options.out + " or its manifest is missing");
    }
    std::ifstream min(manifest_path);
    try {
      manifest = json::parse(min);
    } catch (const json::exception& e) {
      throw ResumeConflict("--resume: unreadable manifest " + manifest_path + ": " + e.what());
    }
    if (manifest.value("config_hash", "") != hex64(config.hash())) {
      throw ResumeConflict("--resume: " + manifest_path + " was written for a different config (hash " +
                           manifest.value("config_hash", "?") + ", now " + hex64(config.hash()) + ")");
    }
    size_t recorded = 0;
    for (const auto& c : manifest["cells"]) {
      done.insert(c["key"].get<std::string>());
      recorded += c["rows"].get<size_t>();
    }
    std::ifstream cin(options.out);
    std::string line;
    size_t lines = 0;
    bool header_ok = false;
    while (std::getline(cin, line)) {
      if (lines == 0) header_ok = line == csv_header();
      ++lines;
    }
    if (!header_ok || lines != recorded + 1) {
      throw ResumeConflict("--resume: " + options.out + " holds " + std::to_string(lines ? lines - 1 : 0) +
                           " rows but the manifest records " + std::to_string(recorded) +
                           "; refusing to modify it");
    }
  } else {
    if (fs::exists(options.out) || fs::exists(manifest_path)) {
      throw ResumeConflict(options.out + " already exists; pass --resume to continue it or choose another --out");
    }
    if (fs::path(options.out).has_parent_path()) {
      fs::create_directories(fs::path(options.out).parent_path());
    }
    std::ofstream(options.out, std::ios::binary) << csv_header() << "\n";
    manifest = {{"format", "dynsyn-manifest"},
                {"format_version", 1},
                {"code_version", version_string()},
                {"config_hash", hex64(config.hash())},
                {"config", config.canonical()},
                {"seed", *config.seed},
                {"csv", fs::path(options.out).filename().string()},
                {"cells", json::array()}};
    write_atomically(manifest_path, manifest.dump(2) + "\n");
  }

  for (size_t k = 0; k < cells.size(); ++k) {
    const Cell& cell = cells[k];
    if (done.count(cell.key())) {
      ++summary.cells_skipped;
      continue;
    }
    if (options.cancel && options.cancel->load()) {
      summary.cancelled = true;
      break;
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<ResultRow> rows = run_cell(config, cell, options.workers);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    {
      std::ofstream out(options.out, std::ios::binary | std::ios::app);
      for (const ResultRow& r : rows) out << csv_line(r) << "\n";
      if (!out) throw std::runtime_error("cannot append to " + options.out);
    }
    manifest["cells"].push_back({{"key", cell.key()}, {"rows", rows.size()}, {"wall_time_s", wall}});
    write_atomically(manifest_path, manifest.dump(2) + "\n");
    ++summary.cells_run;
    if (options.progress) {
      std::cerr << "[" << k + 1 << "/" << cells.size() << "] " << experiment_name(config.experiment) << " "
                << cell.key() << " (" << wall << " s)\n";
    }
  }

  if (!summary.cancelled) {
    std::ifstream in(options.out);
    const std::vector<ResultRow> rows = read_rows(in);
    std::set<std::string> observables;
    for (const ResultRow& r : rows) observables.insert(r.observable);
    std::string control = config.p_m.size() > 1 || config.p_u.size() <= 1 ? "p_m" : "p_u";
    if (config.experiment == Experiment::MeanTr) control = "L";
    for (const std::string& obs : observables) {
      if (obs.rfind("Tr_fit", 0) == 0) continue;
      const std::string svg = plot_rows(rows, obs, control, std::string(experiment_name(config.experiment)) + " " + obs);
      write_atomically(options.out + "." + obs + ".svg", svg);
    }
  }
  return summary;
}

std::string plot_rows(const std::vector<ResultRow>& rows, const std::string& observable, const std::string& control,
                      const std::string& title) {
  std::map<std::string, Series> groups;
  std::vector<std::string> order;
  for (const ResultRow& r : rows) {
    if (r.observable != observable) continue;
    std::string label;
    double x = 0;
    if (control == "L") {
      label = "p_u=" + format_double(r.p_u) + " p_m=" + format_double(r.p_m);
      x = std::log2(static_cast<double>(r.L));
    } else {
      label = "L=" + std::to_string(r.L) + " " + r.depth_rule;
      if (control == "p_m") {
        label += " p_u=" + format_double(r.p_u);
        x = r.p_m;
      } else {
        label += " p_m=" + format_double(r.p_m);
        x = r.p_u;
      }
    }
    if (!groups.count(label)) {
      order.push_back(label);
      groups[label].label = label;
    }
    Series& s = groups[label];
    s.x.push_back(x);
    s.y.push_back(r.value);
    s.err.push_back(r.std_error);
  }
  std::vector<Series> series;
  for (const auto& label : order) series.push_back(groups[label]);
  return line_plot_svg(series, {title, control == "L" ? "log2 L" : control, observable, std::nullopt});
}

CollapseRun collapse_rows(const SweepConfig& config, const std::vector<ResultRow>& rows, int workers) {
  CollapseRun run;
  std::set<std::tuple<uint32_t, int, double>> seen;
  for (const ResultRow& r : rows) {
    if (r.observable != config.observable) continue;
    if (config.select && r.experiment != experiment_name(*config.select)) continue;
    if (!config.fix_p_u.empty() && !contains(config.fix_p_u, r.p_u)) continue;
    if (!config.fix_p_m.empty() && !contains(config.fix_p_m, r.p_m)) continue;
    if (!config.fix_depth.empty() &&
        std::none_of(config.fix_depth.begin(), config.fix_depth.end(),
                     [&](const DepthRule& d) { return d.str() == r.depth_rule; })) {
      continue;
    }
    if (!config.sizes.empty() && std::find(config.sizes.begin(), config.sizes.end(), r.L) == config.sizes.end()) {
      continue;
    }
    const double control = config.control == "p_u" ? r.p_u : r.p_m;
    const double scale = config.scale == "depth" ? r.depth : r.L;
    if (!seen.insert({r.L, r.depth, control}).second) {
      throw CsvError("several rows share L=" + std::to_string(r.L) + ", depth=" + std::to_string(r.depth) + ", " +
                     config.control + "=" + format_double(control) + "; add fix_p_u, fix_p_m or fix_depth");
    }
    if (!(r.std_error >= 0) || r.n_samples == 0) {
      throw CsvError("row for L=" + std::to_string(r.L) + " lacks a usable stderr");
    }
    // Sample means of zero-variance data get the resolution 1/n as their error bar.
    const double d = std::max(r.std_error, 1.0 / static_cast<double>(r.n_samples));
    run.points.push_back({control, scale, r.value, d});
    run.sizes.push_back(r.L);
  }
  if (run.points.empty()) {
    throw CsvError("no rows match the collapse selection (observable '" + config.observable + "')");
  }
  run.result = minimize(run.points, config.box, config.window, config.seed.value_or(0), workers);
  return run;
}

CollapseRun collapse_cmd(const SweepConfig& config, int workers) {
  config.validate();
  std::ifstream in(config.input);
  if (!in) {
    throw CsvError("cannot open " + config.input);
  }
  const std::vector<ResultRow> rows = read_rows(in);
  CollapseRun run = collapse_rows(config, rows, workers);
  const CollapseResult& r = run.result;
  const std::string base = config.out.empty() ? "collapse" : config.out;
  std::set<uint32_t> sizes(run.sizes.begin(), run.sizes.end());
  json j = {{"observable", config.observable},
            {"control", config.control},
            {"scale", config.scale},
            {"p_c", r.p_c},
            {"nu", r.nu},
            {"p_c_err", r.p_c_err},
            {"nu_err", r.nu_err},
            {"eps_min", r.eps_min},
            {"on_boundary", r.on_boundary},
            {"n_points", run.points.size()},
            {"sizes", std::vector<uint32_t>(sizes.begin(), sizes.end())},
            {"config_hash", hex64(config.hash())},
            {"seed", config.seed.value_or(0)},
            {"code_version", version_string()}};
  write_atomically(base + ".json", j.dump(2) + "\n");

  std::map<uint32_t, Series> by_size;
  for (size_t i = 0; i < run.points.size(); ++i) {
    const CollapsePoint& p = run.points[i];
    Series& s = by_size[run.sizes[i]];
    s.label = "L=" + std::to_string(run.sizes[i]);
    s.x.push_back((p.control - r.p_c) * std::pow(p.scale, 1.0 / r.nu));
    s.y.push_back(p.y);
    s.err.push_back(p.d);
  }
  std::vector<Series> series;
  for (auto& [L, s] : by_size) series.push_back(std::move(s));
  const std::string xl = "(" + config.control + " - p_c) " + config.scale + "^(1/nu)";
  write_atomically(base + ".svg", collapse_svg(series, r, {config.observable + " collapse", xl, config.observable, 0.0}));
  return run;
}

StochasticTable stochastic_table(const SweepConfig& config, int workers) {
  config.validate();
  StochasticTable table;
  for (double P : config.P) {
    for (uint32_t L : config.model_sizes) {
      const SimulationResult sim =
          simulate({P, L, 1.0}, 0, config.samples, derive_seed(*config.seed, {seed_key(P), L}), workers);
      double tr_exact = std::nan(""), tr_harm = std::nan(""), tr_z = 0;
      if (P > 0) {
        tr_exact = mean_Tr(P, L, MeanMode::ExactSum);
        tr_harm = mean_Tr(P, L, MeanMode::HarmonicApprox);
        const double diff = sim.mean - tr_exact;
        tr_z = sim.mean_err > 0 ? diff / sim.mean_err : (std::abs(diff) < 1e-12 ? 0.0 : INFINITY);
      }
      for (uint32_t T : config.model_depths) {
        StochasticRow row;
        row.P = P;
        row.L = L;
        row.T = static_cast<int>(T);
        row.d_closed = closed_form_decodability(P, L, row.T);
        std::tie(row.d_sim, row.d_sim_err) = sim.decodability_at(row.T);
        // Binomial test against the closed form: sigma under the hypothesized D.
        const double sigma0 = std::sqrt(row.d_closed * (1 - row.d_closed) / static_cast<double>(config.samples));
        const double d_diff = row.d_sim - row.d_closed;
        row.d_z = sigma0 > 0 ? d_diff / sigma0 : (std::abs(d_diff) < 1e-12 ? 0.0 : INFINITY);
        row.tr_exact = tr_exact;
        row.tr_harmonic = tr_harm;
        row.tr_sim = P > 0 ? sim.mean : std::nan("");
        row.tr_sim_err = sim.mean_err;
        row.tr_z = tr_z;
        row.n_samples = config.samples;
        row.flagged = std::abs(row.d_z) > 3 || std::abs(row.tr_z) > 3;
        table.rows.push_back(row);
      }
    }
  }
  std::vector<double> as = config.a.empty() ? std::vector<double>{1.0, 2.0} : config.a;
  for (double a : as) {
    const CriticalParams c = critical_params(a);
    table.critical.push_back({a, c.P_c, c.nu, ul_threshold(a), universal_G(0.0, a)});
  }
  return table;
}

std::string stochastic_csv(const StochasticTable& table) {
  std::ostringstream o;
  o << "P,L,T,D_closed,D_sim,D_sim_err,D_z,Tr_exact,Tr_harmonic,Tr_sim,Tr_sim_err,Tr_z,n_samples,flag\n";
  for (const StochasticRow& r : table.rows) {
    o << format_double(r.P) << "," << r.L << "," << r.T << "," << format_double(r.d_closed) << ","
      << format_double(r.d_sim) << "," << format_double(r.d_sim_err) << "," << format_double(r.d_z) << ","
      << format_double(r.tr_exact) << "," << format_double(r.tr_harmonic) << "," << format_double(r.tr_sim) << ","
      << format_double(r.tr_sim_err) << "," << format_double(r.tr_z) << "," << r.n_samples << ","
      << (r.flagged ? "DISCREPANCY" : "ok") << "\n";
  }
  o << "\na,P_c,nu,ul_threshold,G0\n";
  for (const auto& c : table.critical) {
    o << format_double(c.a) << "," << format_double(c.P_c) << "," << format_double(c.nu) << ","
      << format_double(c.ul_threshold) << "," << format_double(c.G0) << "\n";
  }
  return o.str();
}

}  // namespace dynsyn
