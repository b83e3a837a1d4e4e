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


#ifndef DYNSYN_FSS_H
#define DYNSYN_FSS_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dynsyn {

struct CollapsePoint {
  /// Driving parameter (p_m or p_u).
  double control = 0;
  /// Length scale: L for entanglement collapses, the depth T for decodability.
  double scale = 1;
  double y = 0;
  /// Standard error of y; must be positive.
  double d = 1;
};

struct Triple {
  double x = 0;
  double y = 0;
  double d = 0;
};

/// x = (control - p_c) scale^(1/nu), sorted ascending in x (stable for ties).
std::vector<Triple> rescale(std::span<const CollapsePoint> points, double p_c, double nu);

class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CostDetail {
  double eps = 0;
  /// Interior points entering the sum.
  size_t n_terms = 0;
  /// Interior points skipped because x_{i+1} == x_{i-1}.
  size_t n_degenerate = 0;
};

/// Collapse quality of triples with x in [x_min, x_max]. The input must be sorted in x.
/// eps = sum_i (y_i - ybar_i)^2 / Delta_i^2 / (n - 2), where ybar_i interpolates
/// linearly between the neighbours and Delta_i^2 propagates the three errors.
/// Throws WindowError when fewer than 3 points fall inside the window.
CostDetail cost_detail(std::span<const Triple> sorted, double x_min, double x_max);
double cost(std::span<const Triple> sorted, double x_min, double x_max);

/// Window endpoints are drawn from N(mu_min, sigma_min) and N(mu_max, sigma_max).
struct WindowSpec {
  double mu_min = -2.2;
  double sigma_min = 0.3;
  double mu_max = 0.1;
  double sigma_max = 0.3;
  int n_windows = 100;
};

/// Mean cost over spec.n_windows windows. Windows come from the stream
/// derive_seed(seed, {0}); a draw with x_min >= x_max or fewer than 3 points is
/// redrawn, and 100 consecutive rejections throw WindowError.
double windowed_cost(std::span<const CollapsePoint> points, double p_c, double nu, const WindowSpec& spec,
                     uint64_t seed);

struct SearchBox {
  double p_c_lo = 0;
  double p_c_hi = 1;
  double nu_lo = 0.3;
  double nu_hi = 5;
  /// Coarse scan resolution per axis.
  int grid = 41;
  /// Resolution of the grid used to trace the 2 eps_min region.
  int refine_grid = 200;
};

struct CostLandscape {
  double p_c_lo = 0, p_c_hi = 0, nu_lo = 0, nu_hi = 0;
  int n_p_c = 0;
  int n_nu = 0;
  /// Row-major [i_nu][i_p_c]; +inf where no feasible window exists.
  std::vector<double> eps;
};

struct CollapseResult {
  double p_c = 0;
  double nu = 0;
  double p_c_err = 0;
  double nu_err = 0;
  double eps_min = 0;
  /// The optimum sits within one coarse cell of the search-box edge.
  bool on_boundary = false;
  CostLandscape landscape;
};

/// Coarse grid scan, simplex refinement from the best cell, then error bars as
/// the half-widths of the bounding box of the connected {eps <= 2 eps_min}
/// region around the optimum, traced on a refine_grid x refine_grid lattice.
CollapseResult minimize(std::span<const CollapsePoint> points, const SearchBox& box, const WindowSpec& spec,
                        uint64_t seed, int workers = 1);

}  // namespace dynsyn

#endif
