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


#ifndef DYNSYN_EXPERIMENTS_H
#define DYNSYN_EXPERIMENTS_H

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsyn/config.h"
#include "dynsyn/fss.h"
#include "dynsyn/svg.h"

namespace dynsyn {

const char* version_string();

/// One line of a sweep CSV. Columns, in order:
/// experiment,lattice,L,p_u,p_m,depth_rule,depth,family,observable,value,stderr,n_samples,seed,version
struct ResultRow {
  std::string experiment;
  std::string lattice;
  uint32_t L = 0;
  double p_u = 0;
  double p_m = 0;
  std::string depth_rule;
  int depth = 0;
  std::string family;
  std::string observable;
  double value = 0;
  double std_error = 0;
  uint64_t n_samples = 0;
  uint64_t seed = 0;
  std::string version;
};

std::string csv_header();
std::string csv_line(const ResultRow& row);

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads rows written by csv_line. Columns are located by header name, so
/// extra columns are ignored and missing ones are reported by name.
std::vector<ResultRow> read_rows(std::istream& in);

/// Raised when --resume finds files that do not belong to the config.
class ResumeConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A unit of work in a sweep. MeanTr cells cover every L at once (L = 0).
struct Cell {
  uint32_t L = 0;
  double p_u = 0;
  double p_m = 0;

  std::string key() const;
};

std::vector<Cell> sweep_cells(const SweepConfig& config);

/// derive_seed(master, {fnv1a64(experiment), lattice, L, bits(p_u), bits(p_m), fnv1a64(family)}).
/// Trajectory i of the cell then uses derive_seed(cell_seed, {i, ...}).
uint64_t cell_seed(const SweepConfig& config, const Cell& cell);

std::vector<ResultRow> run_cell(const SweepConfig& config, const Cell& cell, int workers);

struct SweepOptions {
  std::string out;
  bool resume = false;
  int workers = 1;
  bool progress = true;
  /// Checked between cells; completed cells are always flushed.
  const std::atomic<bool>* cancel = nullptr;
};

struct SweepSummary {
  size_t cells_total = 0;
  size_t cells_run = 0;
  size_t cells_skipped = 0;
  bool cancelled = false;
};

/// Runs the grid cell by cell, appending rows to `out` and recording finished
/// cells in `out`.manifest.json. Also writes one SVG per observable.
SweepSummary run_sweep(const SweepConfig& config, const SweepOptions& options);

/// SVG curves of `observable` against `control` (p_m or p_u), one series per (L, depth rule).
std::string plot_rows(const std::vector<ResultRow>& rows, const std::string& observable, const std::string& control,
                      const std::string& title);

struct CollapseRun {
  CollapseResult result;
  std::vector<CollapsePoint> points;
  std::vector<uint32_t> sizes;  // L of each point
};

/// Selects rows per the collapse config and minimizes the cost. Throws
/// CsvError("no rows ...") when the selection is empty.
CollapseRun collapse_rows(const SweepConfig& config, const std::vector<ResultRow>& rows, int workers);

/// collapse_rows plus JSON and SVG output next to config.out.
CollapseRun collapse_cmd(const SweepConfig& config, int workers);

struct StochasticRow {
  double P = 0;
  uint32_t L = 0;
  int T = 0;
  double d_closed = 0;
  double d_sim = 0;
  double d_sim_err = 0;
  double d_z = 0;
  double tr_exact = 0;
  double tr_harmonic = 0;
  double tr_sim = 0;
  double tr_sim_err = 0;
  double tr_z = 0;
  uint64_t n_samples = 0;
  bool flagged = false;
};

struct StochasticTable {
  std::vector<StochasticRow> rows;
  struct Critical {
    double a, P_c, nu, ul_threshold, G0;
  };
  std::vector<Critical> critical;
};

/// Closed forms next to direct simulation over the P x L x T grid. One
/// simulation per (P, L) serves every T; flagged rows deviate by more than 3 sigma.
StochasticTable stochastic_table(const SweepConfig& config, int workers);
std::string stochastic_csv(const StochasticTable& table);

}  // namespace dynsyn

#endif
