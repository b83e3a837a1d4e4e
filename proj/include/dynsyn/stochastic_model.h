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


#ifndef DYNSYN_STOCHASTIC_MODEL_H
#define DYNSYN_STOCHASTIC_MODEL_H

// Mean-field randomization model: every one of L signs is randomized
// independently with probability P per step, and the logical information is
// lost once the last correlated sign is gone.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dynsyn {

struct StochasticParams {
  double P = 0.5;
  uint64_t L = 1;
  /// Log-coefficient of the depth, T = a log2 L, where relevant.
  double a = 1;

  void validate() const;
};

struct GeometricValues {
  double pdf = 0;
  double cdf = 0;
};

/// Single-clock randomization time: f = (1-P)^t P, F = 1 - (1-P)^(t+1).
GeometricValues geometric_pdf_cdf(double P, int t);

/// Distribution of the largest of L independent clocks.
double order_statistic_pdf(double P, uint64_t L, int t);

/// Probability that the largest clock is > T, i.e. 1 - (1 - (1-P)^(T+1))^L.
double closed_form_decodability(double P, uint64_t L, int T);

enum class MeanMode : uint8_t { ExactSum, HarmonicApprox };

/// Expected randomization depth. Throws std::domain_error for P <= 0 (the mean diverges).
double mean_Tr(double P, uint64_t L, MeanMode mode);

double harmonic_number(uint64_t n);

struct CriticalParams {
  double P_c = 0;
  double nu = 1;
};

/// Critical point of the model at depth T = a log2 L; nu = 1 for every a.
CriticalParams critical_params(double a);

/// Large-L limit of the decodability as a function of x = (P - P_c) T.
double universal_G(double x, double a);

/// Unknown-location threshold estimate 1 - 2^(-1/(2a)).
double ul_threshold(double a);

struct SimulationResult {
  uint64_t n_samples = 0;
  /// Fraction of samples with T_r > T.
  double decodability = 0;
  double decodability_err = 0;
  double mean = 0;
  double mean_err = 0;
  /// histogram[t] = number of samples with T_r = t.
  std::vector<uint64_t> histogram;
  /// Samples with P = 0, which never randomize. Excluded from mean and histogram.
  uint64_t n_never = 0;

  /// Fraction of samples with T_r > T and its binomial error.
  std::pair<double, double> decodability_at(int T) const;
};

/// Direct Monte Carlo of L independent geometric clocks. Sample blocks of
/// 4096 draw from derive_seed(seed, {block}), so results do not depend on `workers`.
SimulationResult simulate(const StochasticParams& params, int T, uint64_t n_samples, uint64_t seed, int workers = 1);

/// c - a / ln(1 - p^beta). Throws std::domain_error outside p in (0, 1].
double log_coefficient_model(double p, double c, double a, double beta);

struct LogCoefficientFit {
  double c = 0;
  double a = 0;
  double beta = 1;
  /// Weighted sum of squared residuals at the optimum.
  double chi2 = 0;
};

/// Least-squares fit of log_coefficient_model by multistart simplex.
/// `sigma` may be empty for an unweighted fit.
LogCoefficientFit fit_log_coefficient(std::span<const double> p, std::span<const double> y,
                                      std::span<const double> sigma = {});

}  // namespace dynsyn

#endif
