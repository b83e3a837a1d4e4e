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


#ifndef DYNSYN_DECODERS_H
#define DYNSYN_DECODERS_H

#include <cstdint>
#include <vector>

#include "dynsyn/circuits.h"
#include "dynsyn/pauli.h"
#include "dynsyn/tableau.h"

namespace dynsyn {

/// Parameters of a circuit ensemble.
struct EnsembleSetup {
  Geometry geometry;
  DepthRule depth = DepthRule::log(1);
  double p_u = 0;
  double p_m = 0;
  InitialFamily family = InitialFamily::Product;

  int depth_steps() const { return depth.evaluate(geometry.linear_size); }
};

struct DecodabilityEstimate {
  double value = 0;
  double std_error = 0;
  uint64_t n_samples = 0;
  /// Depth (in steps) at which the estimate applies.
  int depth_steps = 0;
};

/// Randomization times of `n_traj` known-location trajectories, each run until
/// it stops being decodable or reaches `max_depth` (then kNeverRandomized).
///
/// Trajectory i draws its placements from derive_seed(seed, {i, 0}) and its
/// measurement outcomes from derive_seed(seed, {i, 1}).
std::vector<int> sample_randomization_times(const EnsembleSetup& setup, int max_depth, uint64_t n_traj, uint64_t seed,
                                            int workers = 1);

/// Fraction of randomization times exceeding `depth`.
DecodabilityEstimate decodability_from_times(const std::vector<int>& times, int depth);

/// Known-location decodability at the setup's depth.
DecodabilityEstimate kl_decodability(const EnsembleSetup& setup, uint64_t n_traj, uint64_t seed, int workers = 1);

/// Known-location decodability at several depths from a single set of trajectories.
std::vector<DecodabilityEstimate> kl_decodability_at(const EnsembleSetup& setup, const std::vector<int>& depths,
                                                     uint64_t n_traj, uint64_t seed, int workers = 1);

struct MeanDepthPoint {
  uint32_t linear_size = 0;
  double mean = 0;
  double std_error = 0;
  uint64_t n_used = 0;
  /// Trajectories still decodable at the depth cap; excluded from the mean.
  uint64_t n_censored = 0;
};

struct MeanDepthResult {
  std::vector<MeanDepthPoint> points;
  /// Weighted fit of mean T_r = a log2 L + b over L >= fit_min_size.
  double a = 0;
  double b = 0;
  double a_err = 0;
  double b_err = 0;
  double r_squared = 0;
};

/// Mean randomization depth per system size plus its logarithmic fit.
/// The depth cap is round(cap_coefficient * log2 L).
MeanDepthResult mean_randomization_depth(Lattice lattice, double p_u, double p_m,
                                         const std::vector<uint32_t>& sizes, uint64_t n_traj, uint64_t seed,
                                         int workers = 1, double cap_coefficient = 50, uint32_t fit_min_size = 0);

struct UlWeights {
  /// Averages of <S_i> over measurement realizations, in [-1, 1].
  std::vector<double> weights;
  /// Time-evolved X_i of the measurement-free circuit.
  std::vector<PauliString> benchmark_stabilizers;
  uint64_t n_realizations = 0;
  /// Number of strictly negative averaged weights.
  uint64_t n_negative = 0;

  double max_abs_weight() const;
};

/// Unknown-location weights for the unitaries of `unitaries` (its measurement
/// placements are ignored). Realization r resamples measurements from
/// derive_seed(seed, {r, 0}) and outcomes from derive_seed(seed, {r, 1}).
UlWeights ul_weights(const CircuitRecord& unitaries, double p_m, uint64_t n_meas_realizations, InitialFamily family,
                     uint64_t seed);

struct UlEstimate {
  DecodabilityEstimate decodability;
  uint64_t n_negative_weights = 0;
};

/// D = avg_U max_i |avg_M <S_i>|. Configuration c samples its unitaries from
/// derive_seed(seed, {c}) and its weights use derive_seed(seed, {c, 1}).
UlEstimate ul_decodability(const EnsembleSetup& setup, uint64_t n_unitary_configs, uint64_t n_meas_realizations,
                           uint64_t seed, int workers = 1);

}  // namespace dynsyn

#endif
