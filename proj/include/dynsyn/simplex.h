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


#ifndef DYNSYN_SIMPLEX_H
#define DYNSYN_SIMPLEX_H

#include <functional>
#include <span>
#include <vector>

namespace dynsyn {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexResult {
  std::vector<double> x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead minimization (GSL nmsimplex2). `step` sets the initial simplex
/// edge per coordinate. Non-finite objective values are treated as +huge.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::vector<double> step, int max_iter = 5000,
                          double size_tol = 1e-9);

/// Runs nelder_mead from every start and keeps the lowest value; ties keep the earliest start.
SimplexResult nelder_mead_multistart(const Objective& f, const std::vector<std::vector<double>>& starts,
                                     std::vector<double> step, int max_iter = 5000, double size_tol = 1e-9);

}  // namespace dynsyn

#endif
