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


#ifndef DYNSYN_CIRCUITS_H
#define DYNSYN_CIRCUITS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynsyn/rng.h"
#include "dynsyn/signcolor.h"
#include "dynsyn/tableau.h"

namespace dynsyn {

enum class Lattice : uint8_t {
  /// Periodic ring of L sites.
  Chain,
  /// Periodic L x L torus; site (r, c) has index r * L + c.
  Square,
};

struct Geometry {
  Lattice lattice = Lattice::Chain;
  /// Linear size L. Must be even.
  uint32_t linear_size = 0;

  static Geometry chain(uint32_t L) { return {Lattice::Chain, L}; }
  static Geometry square(uint32_t L) { return {Lattice::Square, L}; }

  uint32_t num_sites() const { return lattice == Lattice::Chain ? linear_size : linear_size * linear_size; }
  std::string str() const;
  bool operator==(const Geometry&) const = default;
};

const char* lattice_name(Lattice lattice);
Lattice parse_lattice(const std::string& name);

/// Circuit depth as a function of the linear size L.
struct DepthRule {
  enum class Kind : uint8_t { Constant, Log, Linear };
  Kind kind = Kind::Constant;
  double value = 1;

  static DepthRule constant(int depth) { return {Kind::Constant, static_cast<double>(depth)}; }
  /// round(a * log2 L).
  static DepthRule log(double a) { return {Kind::Log, a}; }
  /// round(c * L).
  static DepthRule linear(double c) { return {Kind::Linear, c}; }

  /// Parses "const:16", "log2:2" or "linear:0.25".
  static DepthRule parse(const std::string& text);

  /// Number of time steps; always at least 1.
  int evaluate(uint32_t linear_size) const;
  std::string str() const;
  bool operator==(const DepthRule&) const = default;
};

using Bond = std::pair<uint32_t, uint32_t>;

/// One time step: a full set of brickwork (or sublattice) gate layers, then
/// one measurement layer swept in ascending site order.
struct CircuitStep {
  std::vector<std::vector<Bond>> gate_layers;
  std::vector<uint32_t> measured;

  bool operator==(const CircuitStep&) const = default;
};

/// Candidate bonds of each gate layer within one time step.
///
/// Chain: even bonds (2k, 2k+1), then odd bonds (2k+1, 2k+2 mod L).
/// Square: horizontal-even, horizontal-odd, vertical-even, vertical-odd.
std::vector<std::vector<Bond>> candidate_layers(const Geometry& geometry);

/// Deterministic generator of circuit steps.
///
/// Gate placements and measurement placements use separate streams derived
/// from the seed, so resampling one never perturbs the other.
class CircuitSampler {
 public:
  CircuitSampler(Geometry geometry, double p_u, double p_m, uint64_t seed);

  const Geometry& geometry() const { return geometry_; }
  void next(CircuitStep& step);
  /// Draws only a measurement layer, leaving the gate stream untouched.
  void next_measurements(std::vector<uint32_t>& measured);

 private:
  Geometry geometry_;
  double p_u_;
  double p_m_;
  std::vector<std::vector<Bond>> candidates_;
  Rng gate_rng_;
  Rng meas_rng_;
};

struct CircuitRecord {
  Geometry geometry;
  int depth = 0;
  double p_u = 0;
  double p_m = 0;
  uint64_t seed = 0;
  std::vector<CircuitStep> steps;

  bool operator==(const CircuitRecord&) const = default;
};

CircuitRecord sample_circuit(Geometry geometry, int depth, double p_u, double p_m, uint64_t seed);
CircuitRecord sample_1d(uint32_t L, const DepthRule& depth, double p_u, double p_m, uint64_t seed);
CircuitRecord sample_2d(uint32_t L, const DepthRule& depth, double p_u, double p_m, uint64_t seed);

/// Same gate placements, fresh measurement placements at rate p_m drawn from `seed`.
CircuitRecord resample_measurements(const CircuitRecord& record, double p_m, uint64_t seed);

/// Writes a one-line JSON header, optionally followed by the placements.
/// Records without a body are regenerated from their seed on load.
void write_record(std::ostream& out, const CircuitRecord& record, bool include_body);
CircuitRecord read_record(std::istream& in);

struct RunOptions {
  bool track_colors = true;
  int n_bits = 1;
  /// Stop as soon as the coloring is no longer decodable.
  bool stop_when_undecodable = false;
  bool keep_final = true;
  PivotPolicy policy = PivotPolicy::SignColor;
};

struct TrajectoryOutcome {
  /// Number of steps after which the coloring first stops being decodable.
  int randomization_time = kNeverRandomized;
  int steps_run = 0;
  /// trace[t] is the coloring after t steps (trace[0] is the initial state).
  std::vector<ColorState> trace;
  std::optional<ColoredTableau> final_tableau;

  /// Decodability after `depth` steps; valid for depth <= steps_run.
  bool decodable_at(int depth) const { return depth < randomization_time; }
};

void execute_step(ColoredTableau& state, const CircuitStep& step, Rng& outcome_rng,
                  PivotPolicy policy = PivotPolicy::SignColor);

/// Runs a recorded circuit. Outcome randomness comes only from `outcome_rng`.
TrajectoryOutcome run(const CircuitRecord& record, ColoredTableau initial, const RunOptions& options, Rng& outcome_rng);

/// Runs up to `max_depth` steps drawn lazily from the sampler.
TrajectoryOutcome run(CircuitSampler& sampler, int max_depth, ColoredTableau initial, const RunOptions& options,
                      Rng& outcome_rng);

}  // namespace dynsyn

#endif
