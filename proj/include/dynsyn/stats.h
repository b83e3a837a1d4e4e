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


#ifndef DYNSYN_STATS_H
#define DYNSYN_STATS_H

#include <cstddef>
#include <cstdint>
#include <span>

namespace dynsyn {

/// Streaming mean and variance (Welford).
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  size_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const;
  double stddev() const;
  double stderr_of_mean() const;

 private:
  size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

/// Standard error of a binomial proportion k/n, with the proportion
/// regularised to (k + 1/2)/(n + 1) so that 0 and n successes keep a
/// nonzero error.
double binomial_stderr(uint64_t successes, uint64_t trials);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double slope_err = 0;
  double intercept_err = 0;
  /// Weighted coefficient of determination.
  double r_squared = 0;
};

/// Weighted least squares y = slope * x + intercept with weights 1/sigma^2.
/// Zero or missing sigmas mean unit weights.
LinearFit weighted_linear_fit(std::span<const double> x, std::span<const double> y, std::span<const double> sigma);

}  // namespace dynsyn

#endif
