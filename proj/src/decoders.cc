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


#include "dynsyn/decoders.h"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "dynsyn/parallel.h"
#include "dynsyn/stats.h"

namespace dynsyn {

std::vector<int> sample_randomization_times(const EnsembleSetup& setup, int max_depth, uint64_t n_traj, uint64_t seed,
                                            int workers) {
  if (n_traj < 1) {
    throw std::invalid_argument("need at least one trajectory");
  }
  const ColoredTableau initial =
      ColoredTableau::initial_state(setup.geometry.num_sites(), setup.family, /*logical=*/0);
  RunOptions options;
  options.n_bits = family_bits(setup.family);
  options.stop_when_undecodable = true;
  options.keep_final = false;
  std::vector<int> times(n_traj);
  parallel_for(n_traj, workers, [&](size_t i) {
    CircuitSampler sampler(setup.geometry, setup.p_u, setup.p_m, derive_seed(seed, {i, 0}));
    Rng outcomes(derive_seed(seed, {i, 1}));
    times[i] = run(sampler, max_depth, initial, options, outcomes).randomization_time;
  });
  return times;
}

DecodabilityEstimate decodability_from_times(const std::vector<int>& times, int depth) {
  uint64_t decodable = 0;
  for (int t : times) {
    decodable += t > depth ? 1 : 0;
  }
  DecodabilityEstimate estimate;
  estimate.n_samples = times.size();
  estimate.value = times.empty() ? 0.0 : static_cast<double>(decodable) / static_cast<double>(times.size());
  estimate.std_error = binomial_stderr(decodable, times.size());
  estimate.depth_steps = depth;
  return estimate;
}

DecodabilityEstimate kl_decodability(const EnsembleSetup& setup, uint64_t n_traj, uint64_t seed, int workers) {
  return kl_decodability_at(setup, {setup.depth_steps()}, n_traj, seed, workers).front();
}

std::vector<DecodabilityEstimate> kl_decodability_at(const EnsembleSetup& setup, const std::vector<int>& depths,
                                                     uint64_t n_traj, uint64_t seed, int workers) {
  if (depths.empty()) {
    throw std::invalid_argument("kl_decodability_at: no depths requested");
  }
  int max_depth = 0;
  for (int d : depths) {
    if (d < 0) {
      throw std::invalid_argument("kl_decodability_at: negative depth");
    }
    max_depth = std::max(max_depth, d);
  }
  const std::vector<int> times = sample_randomization_times(setup, max_depth, n_traj, seed, workers);
  std::vector<DecodabilityEstimate> out;
  out.reserve(depths.size());
  for (int d : depths) {
    out.push_back(decodability_from_times(times, d));
  }
  return out;
}

MeanDepthResult mean_randomization_depth(Lattice lattice, double p_u, double p_m, const std::vector<uint32_t>& sizes,
                                         uint64_t n_traj, uint64_t seed, int workers, double cap_coefficient,
                                         uint32_t fit_min_size) {
  MeanDepthResult result;
  std::vector<double> xs, ys, sigmas;
  for (uint32_t L : sizes) {
    EnsembleSetup setup{{lattice, L}, DepthRule::log(cap_coefficient), p_u, p_m, InitialFamily::Product};
    const int cap = setup.depth_steps();
    const std::vector<int> times = sample_randomization_times(setup, cap, n_traj, derive_seed(seed, {L}), workers);
    RunningStats stats;
    MeanDepthPoint point;
    point.linear_size = L;
    for (int t : times) {
      if (t == kNeverRandomized) {
        ++point.n_censored;
      } else {
        stats.add(t);
      }
    }
    if (point.n_censored > 0) {
      std::cerr << "warning: " << point.n_censored << " of " << times.size() << " trajectories at L=" << L
                << " reached the depth cap " << cap << " and were excluded\n";
    }
    point.mean = stats.mean();
    point.std_error = stats.stderr_of_mean();
    point.n_used = stats.count();
    result.points.push_back(point);
    if (L >= fit_min_size && point.n_used > 0) {
      xs.push_back(std::log2(static_cast<double>(L)));
      ys.push_back(point.mean);
      sigmas.push_back(point.std_error);
    }
  }
  if (xs.size() >= 2) {
    const LinearFit fit = weighted_linear_fit(xs, ys, sigmas);
    result.a = fit.slope;
    result.b = fit.intercept;
    result.a_err = fit.slope_err;
    result.b_err = fit.intercept_err;
    result.r_squared = fit.r_squared;
  }
  return result;
}

double UlWeights::max_abs_weight() const {
  double best = 0;
  for (double w : weights) {
    best = std::max(best, std::abs(w));
  }
  return best;
}

UlWeights ul_weights(const CircuitRecord& unitaries, double p_m, uint64_t n_meas_realizations, InitialFamily family,
                     uint64_t seed) {
  if (family != InitialFamily::Product) {
    throw std::invalid_argument("ul_weights: only the product family is supported");
  }
  if (n_meas_realizations < 1) {
    throw std::invalid_argument("ul_weights: need at least one measurement realization");
  }
  const size_t n = unitaries.geometry.num_sites();
  const ColoredTableau initial = ColoredTableau::initial_state(n, family, 0);
  RunOptions options;
  options.track_colors = false;

  CircuitRecord benchmark = unitaries;
  benchmark.p_m = 0;
  for (auto& step : benchmark.steps) {
    step.measured.clear();
  }
  Rng unused(0);
  const ColoredTableau evolved = *run(benchmark, initial, options, unused).final_tableau;

  UlWeights result;
  result.benchmark_stabilizers.assign(evolved.stabilizers().begin(), evolved.stabilizers().end());
  result.n_realizations = n_meas_realizations;
  std::vector<int64_t> sums(n, 0);
  for (uint64_t r = 0; r < n_meas_realizations; ++r) {
    const CircuitRecord realization = resample_measurements(unitaries, p_m, derive_seed(seed, {r, 0}));
    Rng outcomes(derive_seed(seed, {r, 1}));
    const ColoredTableau final_state = *run(realization, initial, options, outcomes).final_tableau;
    for (size_t i = 0; i < n; ++i) {
      sums[i] += final_state.expectation(result.benchmark_stabilizers[i]);
    }
  }
  result.weights.resize(n);
  for (size_t i = 0; i < n; ++i) {
    result.weights[i] = static_cast<double>(sums[i]) / static_cast<double>(n_meas_realizations);
    result.n_negative += result.weights[i] < 0 ? 1 : 0;
  }
  return result;
}

UlEstimate ul_decodability(const EnsembleSetup& setup, uint64_t n_unitary_configs, uint64_t n_meas_realizations,
                           uint64_t seed, int workers) {
  if (n_unitary_configs < 1) {
    throw std::invalid_argument("ul_decodability: need at least one unitary configuration");
  }
  const int depth = setup.depth_steps();
  std::vector<double> maxima(n_unitary_configs);
  std::vector<uint64_t> negatives(n_unitary_configs);
  parallel_for(n_unitary_configs, workers, [&](size_t c) {
    const CircuitRecord unitaries = sample_circuit(setup.geometry, depth, setup.p_u, 0.0, derive_seed(seed, {c}));
    const UlWeights w = ul_weights(unitaries, setup.p_m, n_meas_realizations, setup.family, derive_seed(seed, {c, 1}));
    maxima[c] = w.max_abs_weight();
    negatives[c] = w.n_negative;
  });
  RunningStats stats;
  UlEstimate out;
  for (size_t c = 0; c < n_unitary_configs; ++c) {
    stats.add(maxima[c]);
    out.n_negative_weights += negatives[c];
  }
  out.decodability.value = stats.mean();
  out.decodability.std_error = stats.stderr_of_mean();
  out.decodability.n_samples = n_unitary_configs;
  out.decodability.depth_steps = depth;
  return out;
}

}  // namespace dynsyn
