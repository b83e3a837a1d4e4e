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


#include "dynsyn/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <limits>
#include <set>
#include <sstream>

#include "dynsyn/rng.h"

namespace dynsyn {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    out.push_back(trim(item));
  }
  return out;
}

double to_double(const std::string& s) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("expected a number, got '" + s + "'");
  }
  return v;
}

uint64_t to_uint(const std::string& s) {
  uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("expected a nonnegative integer, got '" + s + "'");
  }
  return v;
}

std::vector<double> to_double_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split(s, ',')) {
    if (item.find(':') != std::string::npos) {
      const auto parts = split(item, ':');
      if (parts.size() != 3) {
        throw ConfigError("ranges are start:stop:step, got '" + item + "'");
      }
      const double start = to_double(parts[0]), stop = to_double(parts[1]), step = to_double(parts[2]);
      if (!(step > 0) || stop < start) {
        throw ConfigError("range '" + item + "' is empty or has a non-positive step");
      }
      const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
      for (long k = 0; k <= n; ++k) {
        // Round to 12 significant digits so 0.1 steps do not accumulate noise.
        const double v = start + static_cast<double>(k) * step;
        out.push_back(std::stod(format_double(std::round(v * 1e12) / 1e12)));
      }
    } else if (!item.empty()) {
      out.push_back(to_double(item));
    }
  }
  if (out.empty()) {
    throw ConfigError("empty list");
  }
  return out;
}

std::vector<uint32_t> to_uint_list(const std::string& s) {
  std::vector<uint32_t> out;
  for (double v : to_double_list(s)) {
    if (v < 0 || v != std::floor(v) || v > 4294967295.0) {
      throw ConfigError("expected nonnegative integers, got " + format_double(v));
    }
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

std::vector<DepthRule> to_depth_list(const std::string& s) {
  std::vector<DepthRule> out;
  for (const std::string& item : split(s, ',')) {
    try {
      out.push_back(DepthRule::parse(item));
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (out.empty()) {
    throw ConfigError("empty list");
  }
  return out;
}

std::pair<double, double> to_interval(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) {
    throw ConfigError("expected lo:hi, got '" + s + "'");
  }
  const double lo = to_double(parts[0]), hi = to_double(parts[1]);
  if (!(lo < hi)) {
    throw ConfigError("interval '" + s + "' is empty");
  }
  return {lo, hi};
}

void check_probabilities(const std::vector<double>& v) {
  for (double p : v) {
    if (p < 0 || p > 1) {
      throw ConfigError("probability " + format_double(p) + " outside [0, 1]");
    }
  }
}

template <typename T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f(v[i]);
  }
  return out;
}

using Setter = std::function<void(SweepConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"experiment", [](SweepConfig& c, const std::string& v) { c.experiment = parse_experiment(v); }},
      {"lattice",
       [](SweepConfig& c, const std::string& v) {
         try {
           c.lattice = parse_lattice(v);
         } catch (const std::exception& e) {
           throw ConfigError(e.what());
         }
       }},
      {"L", [](SweepConfig& c, const std::string& v) { c.sizes = to_uint_list(v); }},
      {"p_u",
       [](SweepConfig& c, const std::string& v) {
         c.p_u = to_double_list(v);
         check_probabilities(c.p_u);
       }},
      {"p_m",
       [](SweepConfig& c, const std::string& v) {
         c.p_m = to_double_list(v);
         check_probabilities(c.p_m);
       }},
      {"depth", [](SweepConfig& c, const std::string& v) { c.depths = to_depth_list(v); }},
      {"family",
       [](SweepConfig& c, const std::string& v) {
         try {
           c.family = parse_family(v);
         } catch (const std::exception& e) {
           throw ConfigError(e.what());
         }
       }},
      {"trajectories", [](SweepConfig& c, const std::string& v) { c.trajectories = to_uint(v); }},
      {"unitary_configs", [](SweepConfig& c, const std::string& v) { c.unitary_configs = to_uint(v); }},
      {"meas_realizations", [](SweepConfig& c, const std::string& v) { c.meas_realizations = to_uint(v); }},
      {"depth_cap", [](SweepConfig& c, const std::string& v) { c.depth_cap = to_double(v); }},
      {"fit_min_L", [](SweepConfig& c, const std::string& v) { c.fit_min_size = static_cast<uint32_t>(to_uint(v)); }},
      {"P",
       [](SweepConfig& c, const std::string& v) {
         c.P = to_double_list(v);
         check_probabilities(c.P);
       }},
      {"model_L", [](SweepConfig& c, const std::string& v) { c.model_sizes = to_uint_list(v); }},
      {"model_T", [](SweepConfig& c, const std::string& v) { c.model_depths = to_uint_list(v); }},
      {"a", [](SweepConfig& c, const std::string& v) { c.a = to_double_list(v); }},
      {"samples", [](SweepConfig& c, const std::string& v) { c.samples = to_uint(v); }},
      {"input", [](SweepConfig& c, const std::string& v) { c.input = v; }},
      {"observable", [](SweepConfig& c, const std::string& v) { c.observable = v; }},
      {"select", [](SweepConfig& c, const std::string& v) { c.select = parse_experiment(v); }},
      {"control",
       [](SweepConfig& c, const std::string& v) {
         if (v != "p_m" && v != "p_u") throw ConfigError("control must be p_m or p_u");
         c.control = v;
       }},
      {"scale",
       [](SweepConfig& c, const std::string& v) {
         if (v != "L" && v != "depth") throw ConfigError("scale must be L or depth");
         c.scale = v;
       }},
      {"fix_p_u", [](SweepConfig& c, const std::string& v) { c.fix_p_u = to_double_list(v); }},
      {"fix_p_m", [](SweepConfig& c, const std::string& v) { c.fix_p_m = to_double_list(v); }},
      {"fix_depth", [](SweepConfig& c, const std::string& v) { c.fix_depth = to_depth_list(v); }},
      {"p_c_range",
       [](SweepConfig& c, const std::string& v) {
         std::tie(c.box.p_c_lo, c.box.p_c_hi) = to_interval(v);
       }},
      {"nu_range",
       [](SweepConfig& c, const std::string& v) {
         std::tie(c.box.nu_lo, c.box.nu_hi) = to_interval(v);
       }},
      {"grid", [](SweepConfig& c, const std::string& v) { c.box.grid = static_cast<int>(to_uint(v)); }},
      {"refine_grid", [](SweepConfig& c, const std::string& v) { c.box.refine_grid = static_cast<int>(to_uint(v)); }},
      {"window",
       [](SweepConfig& c, const std::string& v) {
         if (v == "all") {
           // One fixed window spanning every rescaled point.
           c.window = {-std::numeric_limits<double>::infinity(), 0, std::numeric_limits<double>::infinity(), 0, 1};
           return;
         }
         const auto parts = to_double_list(v);
         if (parts.size() != 4) throw ConfigError("window is all or mu_min,sigma_min,mu_max,sigma_max");
         c.window.mu_min = parts[0];
         c.window.sigma_min = parts[1];
         c.window.mu_max = parts[2];
         c.window.sigma_max = parts[3];
       }},
      {"n_windows", [](SweepConfig& c, const std::string& v) { c.window.n_windows = static_cast<int>(to_uint(v)); }},
      {"seed", [](SweepConfig& c, const std::string& v) { c.seed = to_uint(v); }},
      {"out", [](SweepConfig& c, const std::string& v) { c.out = v; }},
      {"workers", [](SweepConfig& c, const std::string& v) { c.workers = static_cast<int>(to_uint(v)); }},
  };
  return table;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, p) : std::string("nan");
}

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Miet: return "miet";
    case Experiment::DtKl: return "dt-kl";
    case Experiment::DtUl: return "dt-ul";
    case Experiment::MeanTr: return "mean-tr";
    case Experiment::Stochastic: return "stochastic";
    case Experiment::Collapse: return "collapse";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::Miet, Experiment::DtKl, Experiment::DtUl, Experiment::MeanTr,
                       Experiment::Stochastic, Experiment::Collapse}) {
    if (name == experiment_name(e)) return e;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

void set_config_value(SweepConfig& config, const std::string& key, const std::string& value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) {
    throw ConfigError(key + ": unknown key");
  }
  try {
    it->second(config, value);
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

SweepConfig parse_config(std::istream& in, const std::string& source) {
  SweepConfig config;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) {
      throw ConfigError(where + "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!seen.insert(key).second) {
      throw ConfigError(where + key + ": repeated key");
    }
    try {
      set_config_value(config, key, trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open");
  }
  return parse_config(in, path);
}

void SweepConfig::validate() const {
  if (!seed) {
    throw ConfigError("seed: required (there is no wall-clock seeding)");
  }
  if (workers < 1) {
    throw ConfigError("workers: must be at least 1");
  }
  auto need = [](bool ok, const char* key) {
    if (!ok) throw ConfigError(std::string(key) + ": required for this experiment");
  };
  switch (experiment) {
    case Experiment::Miet:
    case Experiment::DtKl:
    case Experiment::DtUl:
    case Experiment::MeanTr:
      need(!sizes.empty(), "L");
      need(!p_u.empty(), "p_u");
      need(!p_m.empty(), "p_m");
      if (experiment != Experiment::MeanTr) need(!depths.empty(), "depth");
      for (uint32_t L : sizes) {
        if (L < 2 || L % 2 != 0) throw ConfigError("L: sizes must be even and at least 2");
        if (experiment == Experiment::Miet && L % 4 != 0) throw ConfigError("L: miet needs L divisible by 4");
      }
      if (experiment == Experiment::Miet && lattice != Lattice::Chain) {
        throw ConfigError("lattice: miet is defined on the chain only");
      }
      if (experiment == Experiment::DtUl && family != InitialFamily::Product) {
        throw ConfigError("family: dt-ul supports the product family only");
      }
      if (trajectories < 1 || unitary_configs < 1 || meas_realizations < 1) {
        throw ConfigError("sample counts must be at least 1");
      }
      break;
    case Experiment::Stochastic:
      need(!P.empty(), "P");
      need(!model_sizes.empty(), "model_L");
      need(!model_depths.empty(), "model_T");
      if (samples < 1) throw ConfigError("samples: must be at least 1");
      for (uint32_t L : model_sizes) {
        if (L < 1) throw ConfigError("model_L: sizes must be at least 1");
      }
      for (double v : a) {
        if (!(v > 0)) throw ConfigError("a: coefficients must be positive");
      }
      break;
    case Experiment::Collapse:
      need(!input.empty(), "input");
      need(!observable.empty(), "observable");
      if (box.grid < 2 || box.refine_grid < 3) throw ConfigError("grid: resolution too small");
      if (!(box.nu_lo > 0)) throw ConfigError("nu_range: must be positive");
      if (window.n_windows < 1) throw ConfigError("n_windows: must be at least 1");
      break;
  }
}

std::string SweepConfig::canonical() const {
  std::ostringstream o;
  auto dbl = [](const double& v) { return format_double(v); };
  auto u32 = [](const uint32_t& v) { return std::to_string(v); };
  auto dep = [](const DepthRule& d) { return d.str(); };
  o << "experiment=" << experiment_name(experiment) << "\n";
  o << "lattice=" << lattice_name(lattice) << "\n";
  o << "L=" << join<uint32_t>(sizes, u32) << "\n";
  o << "p_u=" << join<double>(p_u, dbl) << "\n";
  o << "p_m=" << join<double>(p_m, dbl) << "\n";
  o << "depth=" << join<DepthRule>(depths, dep) << "\n";
  o << "family=" << family_name(family) << "\n";
  o << "trajectories=" << trajectories << "\n";
  o << "unitary_configs=" << unitary_configs << "\n";
  o << "meas_realizations=" << meas_realizations << "\n";
  o << "depth_cap=" << format_double(depth_cap) << "\n";
  o << "fit_min_L=" << fit_min_size << "\n";
  o << "P=" << join<double>(P, dbl) << "\n";
  o << "model_L=" << join<uint32_t>(model_sizes, u32) << "\n";
  o << "model_T=" << join<uint32_t>(model_depths, u32) << "\n";
  o << "a=" << join<double>(a, dbl) << "\n";
  o << "samples=" << samples << "\n";
  o << "input=" << input << "\n";
  o << "observable=" << observable << "\n";
  o << "select=" << (select ? experiment_name(*select) : "") << "\n";
  o << "control=" << control << "\n";
  o << "scale=" << scale << "\n";
  o << "fix_p_u=" << join<double>(fix_p_u, dbl) << "\n";
  o << "fix_p_m=" << join<double>(fix_p_m, dbl) << "\n";
  o << "fix_depth=" << join<DepthRule>(fix_depth, dep) << "\n";
  o << "p_c_range=" << format_double(box.p_c_lo) << ":" << format_double(box.p_c_hi) << "\n";
  o << "nu_range=" << format_double(box.nu_lo) << ":" << format_double(box.nu_hi) << "\n";
  o << "grid=" << box.grid << "\n";
  o << "refine_grid=" << box.refine_grid << "\n";
  o << "window=" << format_double(window.mu_min) << "," << format_double(window.sigma_min) << ","
    << format_double(window.mu_max) << "," << format_double(window.sigma_max) << "\n";
  o << "n_windows=" << window.n_windows << "\n";
  o << "seed=" << (seed ? std::to_string(*seed) : "") << "\n";
  return o.str();
}

uint64_t SweepConfig::hash() const { return fnv1a64(canonical()); }

}  // namespace dynsyn
