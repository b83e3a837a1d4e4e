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


#ifndef DYNSYN_CONFIG_H
#define DYNSYN_CONFIG_H

// Sweep configuration files: one `key = value` per line, `#` starts a comment.
// Lists are comma separated; numeric lists also accept inclusive ranges
// `start:stop:step`. Unknown keys, repeated keys and malformed values are errors.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsyn/circuits.h"
#include "dynsyn/fss.h"
#include "dynsyn/tableau.h"

namespace dynsyn {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment : uint8_t { Miet, DtKl, DtUl, MeanTr, Stochastic, Collapse };

const char* experiment_name(Experiment e);
Experiment parse_experiment(const std::string& name);

struct SweepConfig {
  Experiment experiment = Experiment::DtKl;

  // Circuit ensembles.
  Lattice lattice = Lattice::Chain;
  std::vector<uint32_t> sizes;
  std::vector<double> p_u;
  std::vector<double> p_m;
  std::vector<DepthRule> depths;
  InitialFamily family = InitialFamily::Product;
  uint64_t trajectories = 1000;
  uint64_t unitary_configs = 500;
  uint64_t meas_realizations = 200;
  double depth_cap = 50;
  uint32_t fit_min_size = 0;

  // Stochastic model grid.
  std::vector<double> P;
  std::vector<uint32_t> model_sizes;
  std::vector<uint32_t> model_depths;
  std::vector<double> a;
  uint64_t samples = 100000;

  // Collapse.
  std::string input;
  std::string observable;
  std::optional<Experiment> select;
  std::string control = "p_m";
  std::string scale = "L";
  std::vector<double> fix_p_u;
  std::vector<double> fix_p_m;
  std::vector<DepthRule> fix_depth;
  SearchBox box;
  WindowSpec window;

  std::optional<uint64_t> seed;
  std::string out;
  int workers = 1;

  /// Canonical text of every field that affects results (`out` and `workers` excluded).
  std::string canonical() const;
  /// FNV-1a of canonical().
  uint64_t hash() const;
  /// Cross-field checks for the selected experiment; throws ConfigError.
  void validate() const;
};

/// Parses a config file. Errors carry `source:line: key: message`.
SweepConfig parse_config(std::istream& in, const std::string& source = "<config>");
SweepConfig load_config(const std::string& path);

/// Applies one `key = value` assignment, as used by files and command-line overrides.
void set_config_value(SweepConfig& config, const std::string& key, const std::string& value);

std::string format_double(double v);

}  // namespace dynsyn

#endif
