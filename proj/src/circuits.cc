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


#include "dynsyn/circuits.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dynsyn {

namespace {

constexpr int kRecordFormatVersion = 1;

void check_geometry(const Geometry& geometry) {
  if (geometry.linear_size < 2 || geometry.linear_size % 2 != 0) {
    throw std::invalid_argument("circuit geometry needs an even linear size >= 2, got " +
                                std::to_string(geometry.linear_size));
  }
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

void put_u32(std::ostream& out, uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) {
    throw std::runtime_error("circuit record: truncated body");
  }
  return bytes[0] | (bytes[1] << 8) | (bytes[2] << 16) | (static_cast<uint32_t>(bytes[3]) << 24);
}

}  // namespace

const char* lattice_name(Lattice lattice) { return lattice == Lattice::Chain ? "chain" : "square"; }

Lattice parse_lattice(const std::string& name) {
  if (name == "chain") return Lattice::Chain;
  if (name == "square") return Lattice::Square;
  throw std::invalid_argument("unknown geometry '" + name + "' (expected chain or square)");
}

std::string Geometry::str() const {
  return std::string(lattice_name(lattice)) + "(" + std::to_string(linear_size) + ")";
}

DepthRule DepthRule::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("depth rule '" + text + "' must look like const:16, log2:2 or linear:0.25");
  }
  const std::string kind = text.substr(0, colon);
  double value = 0;
  try {
    size_t used = 0;
    value = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("depth rule '" + text + "' has a malformed number");
  }
  if (!(value > 0)) {
    throw std::invalid_argument("depth rule '" + text + "' needs a positive value");
  }
  if (kind == "const") {
    if (value != std::floor(value)) {
      throw std::invalid_argument("constant depth must be an integer");
    }
    return constant(static_cast<int>(value));
  }
  if (kind == "log2") return log(value);
  if (kind == "linear") return linear(value);
  throw std::invalid_argument("unknown depth rule kind '" + kind + "'");
}

int DepthRule::evaluate(uint32_t linear_size) const {
  double depth = value;
  if (kind == Kind::Log) {
    depth = std::round(value * std::log2(static_cast<double>(linear_size)));
  } else if (kind == Kind::Linear) {
    depth = std::round(value * linear_size);
  }
  return std::max(1, static_cast<int>(depth));
}

std::string DepthRule::str() const {
  std::ostringstream out;
  out << (kind == Kind::Constant ? "const:" : kind == Kind::Log ? "log2:" : "linear:") << value;
  return out.str();
}

std::vector<std::vector<Bond>> candidate_layers(const Geometry& geometry) {
  check_geometry(geometry);
  const uint32_t L = geometry.linear_size;
  std::vector<std::vector<Bond>> layers;
  if (geometry.lattice == Lattice::Chain) {
    for (uint32_t offset = 0; offset < 2; ++offset) {
      auto& layer = layers.emplace_back();
      for (uint32_t i = offset; i < L; i += 2) {
        layer.emplace_back(i, (i + 1) % L);
      }
    }
    return layers;
  }
  auto site = [L](uint32_t r, uint32_t c) { return (r % L) * L + (c % L); };
  for (uint32_t offset = 0; offset < 2; ++offset) {
    auto& layer = layers.emplace_back();
    for (uint32_t r = 0; r < L; ++r) {
      for (uint32_t c = offset; c < L; c += 2) {
        layer.emplace_back(site(r, c), site(r, c + 1));
      }
    }
  }
  for (uint32_t offset = 0; offset < 2; ++offset) {
    auto& layer = layers.emplace_back();
    for (uint32_t r = offset; r < L; r += 2) {
      for (uint32_t c = 0; c < L; ++c) {
        layer.emplace_back(site(r, c), site(r + 1, c));
      }
    }
  }
  return layers;
}

CircuitSampler::CircuitSampler(Geometry geometry, double p_u, double p_m, uint64_t seed)
    : geometry_(geometry),
      p_u_(p_u),
      p_m_(p_m),
      candidates_(candidate_layers(geometry)),
      gate_rng_(derive_seed(seed, {1})),
      meas_rng_(derive_seed(seed, {2})) {
  check_probability(p_u, "p_u");
  check_probability(p_m, "p_m");
}

void CircuitSampler::next(CircuitStep& step) {
  step.gate_layers.resize(candidates_.size());
  for (size_t layer = 0; layer < candidates_.size(); ++layer) {
    auto& placed = step.gate_layers[layer];
    placed.clear();
    for (const Bond& bond : candidates_[layer]) {
      if (bernoulli(gate_rng_, p_u_)) {
        placed.push_back(bond);
      }
    }
  }
  next_measurements(step.measured);
}

void CircuitSampler::next_measurements(std::vector<uint32_t>& measured) {
  measured.clear();
  const uint32_t n = geometry_.num_sites();
  for (uint32_t s = 0; s < n; ++s) {
    if (bernoulli(meas_rng_, p_m_)) {
      measured.push_back(s);
    }
  }
}

CircuitRecord sample_circuit(Geometry geometry, int depth, double p_u, double p_m, uint64_t seed) {
  if (depth < 1) {
    throw std::invalid_argument("circuit depth must be at least 1");
  }
  CircuitSampler sampler(geometry, p_u, p_m, seed);
  CircuitRecord record{geometry, depth, p_u, p_m, seed, {}};
  record.steps.resize(depth);
  for (auto& step : record.steps) {
    sampler.next(step);
  }
  return record;
}

CircuitRecord sample_1d(uint32_t L, const DepthRule& depth, double p_u, double p_m, uint64_t seed) {
  return sample_circuit(Geometry::chain(L), depth.evaluate(L), p_u, p_m, seed);
}

CircuitRecord sample_2d(uint32_t L, const DepthRule& depth, double p_u, double p_m, uint64_t seed) {
  return sample_circuit(Geometry::square(L), depth.evaluate(L), p_u, p_m, seed);
}

CircuitRecord resample_measurements(const CircuitRecord& record, double p_m, uint64_t seed) {
  CircuitSampler sampler(record.geometry, record.p_u, p_m, seed);
  CircuitRecord out = record;
  out.p_m = p_m;
  for (auto& step : out.steps) {
    sampler.next_measurements(step.measured);
  }
  return out;
}

void write_record(std::ostream& out, const CircuitRecord& record, bool include_body) {
  nlohmann::json header = {
      {"format", "dynsyn-circuit"},
      {"version", kRecordFormatVersion},
      {"geometry", lattice_name(record.geometry.lattice)},
      {"L", record.geometry.linear_size},
      {"depth", record.depth},
      {"p_u", record.p_u},
      {"p_m", record.p_m},
      {"seed", record.seed},
      {"body", include_body},
  };
  out << header.dump() << '\n';
  if (!include_body) {
    return;
  }
  for (const auto& step : record.steps) {
    put_u32(out, static_cast<uint32_t>(step.gate_layers.size()));
    for (const auto& layer : step.gate_layers) {
      put_u32(out, static_cast<uint32_t>(layer.size()));
      for (const auto& [a, b] : layer) {
        put_u32(out, a);
        put_u32(out, b);
      }
    }
    put_u32(out, static_cast<uint32_t>(step.measured.size()));
    for (uint32_t s : step.measured) {
      put_u32(out, s);
    }
  }
}

CircuitRecord read_record(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("circuit record: missing header");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("circuit record: bad header: ") + e.what());
  }
  if (header.value("format", "") != "dynsyn-circuit") {
    throw std::runtime_error("circuit record: not a dynsyn circuit file");
  }
  if (header.value("version", 0) != kRecordFormatVersion) {
    throw std::runtime_error("circuit record: unsupported version");
  }
  const Geometry geometry{parse_lattice(header.at("geometry").get<std::string>()), header.at("L").get<uint32_t>()};
  CircuitRecord record = sample_circuit(geometry, header.at("depth").get<int>(), header.at("p_u").get<double>(),
                                        header.at("p_m").get<double>(), header.at("seed").get<uint64_t>());
  if (!header.at("body").get<bool>()) {
    return record;
  }
  // A stored body overrides the regenerated placements.
  for (auto& step : record.steps) {
    step.gate_layers.resize(get_u32(in));
    for (auto& layer : step.gate_layers) {
      layer.resize(get_u32(in));
      for (auto& bond : layer) {
        bond.first = get_u32(in);
        bond.second = get_u32(in);
      }
    }
    step.measured.resize(get_u32(in));
    for (auto& s : step.measured) {
      s = get_u32(in);
    }
  }
  return record;
}

void execute_step(ColoredTableau& state, const CircuitStep& step, Rng& outcome_rng, PivotPolicy policy) {
  for (const auto& layer : step.gate_layers) {
    for (const auto& [a, b] : layer) {
      state.apply_xxzz(a, b);
    }
  }
  for (uint32_t site : step.measured) {
    state.measure_x(site, outcome_rng, policy);
  }
}

namespace {

template <typename NextStep>
TrajectoryOutcome run_steps(int max_depth, ColoredTableau state, const RunOptions& options, Rng& outcome_rng,
                            NextStep&& next_step) {
  TrajectoryOutcome outcome;
  auto observe = [&](int t) {
    if (!options.track_colors) {
      return;
    }
    ColorState colors = state.color_state();
    if (outcome.randomization_time == kNeverRandomized && !is_decodable(colors, options.n_bits)) {
      outcome.randomization_time = t;
    }
    outcome.trace.push_back(std::move(colors));
  };
  observe(0);
  for (int t = 1; t <= max_depth; ++t) {
    if (options.stop_when_undecodable && outcome.randomization_time != kNeverRandomized) {
      break;
    }
    execute_step(state, next_step(), outcome_rng, options.policy);
    outcome.steps_run = t;
    observe(t);
  }
  if (options.keep_final) {
    outcome.final_tableau = std::move(state);
  }
  return outcome;
}

}  // namespace

TrajectoryOutcome run(const CircuitRecord& record, ColoredTableau initial, const RunOptions& options,
                      Rng& outcome_rng) {
  if (initial.num_qubits() != record.geometry.num_sites()) {
    throw std::invalid_argument("run: tableau size does not match the circuit geometry");
  }
  size_t next = 0;
  return run_steps(record.depth, std::move(initial), options, outcome_rng,
                   [&]() -> const CircuitStep& { return record.steps.at(next++); });
}

TrajectoryOutcome run(CircuitSampler& sampler, int max_depth, ColoredTableau initial, const RunOptions& options,
                      Rng& outcome_rng) {
  if (initial.num_qubits() != sampler.geometry().num_sites()) {
    throw std::invalid_argument("run: tableau size does not match the circuit geometry");
  }
  CircuitStep step;
  return run_steps(max_depth, std::move(initial), options, outcome_rng, [&]() -> const CircuitStep& {
    sampler.next(step);
    return step;
  });
}

}  // namespace dynsyn
