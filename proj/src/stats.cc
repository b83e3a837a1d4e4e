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


#include "dynsyn/stats.h"

#include <cmath>
#include <stdexcept>

namespace dynsyn {

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) {
    return;
  }
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(n_ + other.n_);
  const double delta = other.mean_ - mean_;
  mean_ += delta * static_cast<double>(other.n_) / total;
  m2_ += other.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(other.n_) / total;
  n_ += other.n_;
}

double RunningStats::variance() const { return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1); }

double RunningStats::stddev() const { return std::sqrt(variance()); }

double RunningStats::stderr_of_mean() const { return n_ == 0 ? 0.0 : stddev() / std::sqrt(static_cast<double>(n_)); }

double binomial_stderr(uint64_t successes, uint64_t trials) {
  if (trials == 0) {
    return 0.0;
  }
  const double p = (static_cast<double>(successes) + 0.5) / (static_cast<double>(trials) + 1.0);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

LinearFit weighted_linear_fit(std::span<const double> x, std::span<const double> y, std::span<const double> sigma) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("weighted_linear_fit: need at least two (x, y) pairs");
  }
  const bool weighted = sigma.size() == x.size();
  double s = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double w = (weighted && sigma[i] > 0) ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
    s += w;
    sx += w * x[i];
    sy += w * y[i];
    sxx += w * x[i] * x[i];
    sxy += w * x[i] * y[i];
  }
  const double det = s * sxx - sx * sx;
  if (det == 0) {
    throw std::invalid_argument("weighted_linear_fit: degenerate x values");
  }
  LinearFit fit;
  fit.slope = (s * sxy - sx * sy) / det;
  fit.intercept = (sxx * sy - sx * sxy) / det;
  fit.slope_err = std::sqrt(s / det);
  fit.intercept_err = std::sqrt(sxx / det);
  const double ybar = sy / s;
  double ss_res = 0, ss_tot = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double w = (weighted && sigma[i] > 0) ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += w * r * r;
    ss_tot += w * (y[i] - ybar) * (y[i] - ybar);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace dynsyn
