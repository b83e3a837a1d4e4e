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


#include "dynsyn/stochastic_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "dynsyn/parallel.h"
#include "dynsyn/rng.h"
#include "dynsyn/simplex.h"
#include "dynsyn/stats.h"

namespace dynsyn {
namespace {

void check_probability(double P) {
  if (!(P >= 0.0 && P <= 1.0)) {
    throw std::invalid_argument("randomization probability must lie in [0, 1]");
  }
}

// (1 - (1-P)^k)^L, evaluated in log space so that L up to 2^20 stays accurate.
double all_randomized_by(double P, uint64_t L, int k) {
  if (k <= 0) {
    return L == 0 ? 1.0 : 0.0;
  }
  if (P >= 1.0) {
    return 1.0;
  }
  const double survive = std::exp(static_cast<double>(k) * std::log1p(-P));
  if (survive >= 1.0) {
    return 0.0;
  }
  return std::exp(static_cast<double>(L) * std::log1p(-survive));
}

}  // namespace

void StochasticParams::validate() const {
  check_probability(P);
  if (L < 1) {
    throw std::invalid_argument("StochasticParams: L must be at least 1");
  }
  if (!(a > 0)) {
    throw std::invalid_argument("StochasticParams: a must be positive");
  }
}

GeometricValues geometric_pdf_cdf(double P, int t) {
  check_probability(P);
  if (t < 0) {
    throw std::invalid_argument("geometric_pdf_cdf: t must be nonnegative");
  }
  const double q = 1.0 - P;
  return {std::pow(q, t) * P, 1.0 - std::pow(q, t + 1)};
}

double order_statistic_pdf(double P, uint64_t L, int t) {
  check_probability(P);
  if (t < 0) {
    throw std::invalid_argument("order_statistic_pdf: t must be nonnegative");
  }
  return all_randomized_by(P, L, t + 1) - all_randomized_by(P, L, t);
}

double closed_form_decodability(double P, uint64_t L, int T) {
  check_probability(P);
  if (T < 0) {
    throw std::invalid_argument("closed_form_decodability: T must be nonnegative");
  }
  return 1.0 - all_randomized_by(P, L, T + 1);
}

double harmonic_number(uint64_t n) {
  if (n <= 1000000) {
    double h = 0;
    for (uint64_t k = n; k >= 1; --k) {
      h += 1.0 / static_cast<double>(k);
    }
    return h;
  }
  const double x = static_cast<double>(n);
  return std::log(x) + std::numbers::egamma + 1.0 / (2 * x) - 1.0 / (12 * x * x);
}

double mean_Tr(double P, uint64_t L, MeanMode mode) {
  check_probability(P);
  if (P <= 0.0) {
    throw std::domain_error("mean_Tr: diverges for P = 0");
  }
  if (L < 1) {
    throw std::invalid_argument("mean_Tr: L must be at least 1");
  }
  if (P >= 1.0) {
    return 0.0;
  }
  if (mode == MeanMode::HarmonicApprox) {
    return harmonic_number(L) / std::log(1.0 / (1.0 - P)) - 0.5;
  }
  // E[T] = sum_t t f_os(t) = sum_{t>=0} P(T > t). The tail past t is bounded by
  // L (1-P)^(t+1) / P, which sets the truncation.
  const double log_q = std::log1p(-P);
  double mean = 0;
  for (int t = 0;; ++t) {
    mean += closed_form_decodability(P, L, t);
    const double tail = std::exp(std::log(static_cast<double>(L)) + (t + 1) * log_q - std::log(P));
    if (tail < 1e-10) {
      break;
    }
  }
  return mean;
}

CriticalParams critical_params(double a) {
  if (!(a > 0)) {
    throw std::invalid_argument("critical_params: a must be positive");
  }
  return {1.0 - std::exp2(-1.0 / a), 1.0};
}

double universal_G(double x, double a) {
  if (!(a > 0)) {
    throw std::invalid_argument("universal_G: a must be positive");
  }
  return -std::expm1(-std::exp2(-1.0 / a) * std::exp(-std::exp2(1.0 / a) * x));
}

double ul_threshold(double a) {
  if (!(a > 0)) {
    throw std::invalid_argument("ul_threshold: a must be positive");
  }
  return 1.0 - std::exp2(-1.0 / (2 * a));
}

SimulationResult simulate(const StochasticParams& params, int T, uint64_t n_samples, uint64_t seed, int workers) {
  params.validate();
  if (n_samples < 1) {
    throw std::invalid_argument("simulate: need at least one sample");
  }
  if (T < 0) {
    throw std::invalid_argument("simulate: T must be nonnegative");
  }
  SimulationResult result;
  result.n_samples = n_samples;
  if (params.P <= 0.0) {
    result.decodability = 1.0;
    result.decodability_err = binomial_stderr(n_samples, n_samples);
    result.n_never = n_samples;
    return result;
  }

  constexpr uint64_t kBlock = 4096;
  const uint64_t n_blocks = (n_samples + kBlock - 1) / kBlock;
  struct Block {
    std::vector<uint64_t> histogram;
    RunningStats stats;
  };
  std::vector<Block> blocks(n_blocks);
  parallel_for(n_blocks, workers, [&](size_t b) {
    Rng rng(derive_seed(seed, {b}));
    std::geometric_distribution<int> clock(params.P < 1.0 ? params.P : 0.5);
    const uint64_t begin = b * kBlock;
    const uint64_t end = std::min(n_samples, begin + kBlock);
    Block& block = blocks[b];
    for (uint64_t s = begin; s < end; ++s) {
      int t_max = 0;
      if (params.P < 1.0) {
        for (uint64_t i = 0; i < params.L; ++i) {
          t_max = std::max(t_max, clock(rng));
        }
      }
      if (block.histogram.size() <= static_cast<size_t>(t_max)) {
        block.histogram.resize(t_max + 1, 0);
      }
      ++block.histogram[t_max];
      block.stats.add(t_max);
    }
  });

  RunningStats total;
  for (const Block& block : blocks) {
    total.merge(block.stats);
    if (result.histogram.size() < block.histogram.size()) {
      result.histogram.resize(block.histogram.size(), 0);
    }
    for (size_t t = 0; t < block.histogram.size(); ++t) {
      result.histogram[t] += block.histogram[t];
    }
  }
  std::tie(result.decodability, result.decodability_err) = result.decodability_at(T);
  result.mean = total.mean();
  result.mean_err = total.stderr_of_mean();
  return result;
}

std::pair<double, double> SimulationResult::decodability_at(int T) const {
  if (T < 0) {
    throw std::invalid_argument("decodability_at: T must be nonnegative");
  }
  uint64_t above = n_never;
  for (size_t t = static_cast<size_t>(T) + 1; t < histogram.size(); ++t) {
    above += histogram[t];
  }
  return {static_cast<double>(above) / static_cast<double>(n_samples), binomial_stderr(above, n_samples)};
}

double log_coefficient_model(double p, double c, double a, double beta) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("log_coefficient_model: p must lie in (0, 1]");
  }
  return c - a / std::log1p(-std::pow(p, beta));
}

LogCoefficientFit fit_log_coefficient(std::span<const double> p, std::span<const double> y,
                                      std::span<const double> sigma) {
  if (p.size() != y.size() || p.size() < 3) {
    throw std::invalid_argument("fit_log_coefficient: need at least three (p, y) pairs");
  }
  if (!sigma.empty() && sigma.size() != p.size()) {
    throw std::invalid_argument("fit_log_coefficient: sigma size mismatch");
  }
  for (double v : p) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw std::domain_error("fit_log_coefficient: p must lie in (0, 1]");
    }
  }
  auto weight = [&](size_t i) { return (sigma.empty() || sigma[i] <= 0) ? 1.0 : 1.0 / (sigma[i] * sigma[i]); };
  auto chi2 = [&](std::span<const double> v) {
    if (!(v[2] > 0)) {
      return std::numeric_limits<double>::infinity();
    }
    double s = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      const double r = y[i] - (v[0] - v[1] / std::log1p(-std::pow(p[i], v[2])));
      s += weight(i) * r * r;
    }
    return s;
  };

  // For fixed beta the model is linear in (c, a); seed one simplex per beta from that solve.
  std::vector<std::vector<double>> starts;
  double y_scale = 0;
  for (double v : y) {
    y_scale = std::max(y_scale, std::abs(v));
  }
  for (double beta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    double sw = 0, sg = 0, sy = 0, sgg = 0, sgy = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      const double g = -1.0 / std::log1p(-std::pow(p[i], beta));
      const double yi = std::isfinite(g) ? y[i] : 0.0;
      const double gi = std::isfinite(g) ? g : 0.0;
      const double w = weight(i);
      sw += w;
      sg += w * gi;
      sy += w * yi;
      sgg += w * gi * gi;
      sgy += w * gi * yi;
    }
    const double det = sw * sgg - sg * sg;
    if (std::abs(det) < 1e-300) {
      continue;
    }
    starts.push_back({(sgg * sy - sg * sgy) / det, (sw * sgy - sg * sy) / det, beta});
  }
  if (starts.empty()) {
    starts.push_back({0.0, y_scale, 1.0});
  }
  const double step = std::max(0.1 * y_scale, 1e-3);
  SimplexResult best = nelder_mead_multistart(chi2, starts, {step, step, 0.1}, 20000, 1e-12);
  // One restart from the optimum shakes the simplex out of premature collapse.
  best = nelder_mead(chi2, best.x, {step, step, 0.1}, 20000, 1e-12);
  return {best.x[0], best.x[1], best.x[2], best.value};
}

}  // namespace dynsyn
