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


#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "dynsyn/circuits.h"
#include "dynsyn/entanglement.h"
#include "testing/selfcheck.h"
#include "testing/statevector.h"

namespace dynsyn {
namespace {

TEST(Circuits, DepthRules) {
  EXPECT_EQ(DepthRule::constant(16).evaluate(512), 16);
  EXPECT_EQ(DepthRule::log(2).evaluate(512), 18);
  EXPECT_EQ(DepthRule::log(1).evaluate(24), 5);  // round(4.585)
  EXPECT_EQ(DepthRule::linear(0.25).evaluate(64), 16);
  EXPECT_EQ(DepthRule::linear(0.01).evaluate(8), 1);
  EXPECT_EQ(DepthRule::parse("log2:2"), DepthRule::log(2));
  EXPECT_EQ(DepthRule::parse(DepthRule::linear(0.25).str()), DepthRule::linear(0.25));
  EXPECT_THROW(DepthRule::parse("cubic:2"), std::invalid_argument);
}

TEST(Circuits, FullRatesGiveFullBrickwork) {
  const CircuitRecord rec = sample_circuit(Geometry::chain(4), 1, 1.0, 0.0, 42);
  ASSERT_EQ(rec.steps.size(), 1u);
  const auto& layers = rec.steps[0].gate_layers;
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0], (std::vector<Bond>{{0, 1}, {2, 3}}));
  EXPECT_EQ(layers[1], (std::vector<Bond>{{1, 2}, {3, 0}}));
  EXPECT_TRUE(rec.steps[0].measured.empty());
  const CircuitRecord none = sample_circuit(Geometry::chain(4), 3, 0.0, 1.0, 42);
  for (const auto& step : none.steps) {
    for (const auto& layer : step.gate_layers) EXPECT_TRUE(layer.empty());
    EXPECT_EQ(step.measured, (std::vector<uint32_t>{0, 1, 2, 3}));
  }
}

TEST(Circuits, SquareLatticeHasFourFullLayersWithWrap) {
  const auto layers = candidate_layers(Geometry::square(2));
  ASSERT_EQ(layers.size(), 4u);
  std::set<Bond> all;
  for (const auto& layer : layers) {
    EXPECT_EQ(layer.size(), 2u);
    for (const auto& [a, b] : layer) all.insert(std::minmax(a, b));
  }
  // L = 2 wraps each bond onto itself, so the odd layers repeat the even ones.
  EXPECT_EQ(all.size(), 4u);
  const auto big = candidate_layers(Geometry::square(4));
  for (const auto& layer : big) EXPECT_EQ(layer.size(), 8u);
}

TEST(Circuits, GatePairsAreDisjointWithinLayers) {
  for (uint64_t s = 0; s < 1000; ++s) {
    const Geometry g = s % 2 ? Geometry::chain(2 + 2 * (s % 7)) : Geometry::square(2 + 2 * (s % 3));
    const CircuitRecord rec = sample_circuit(g, 3, 0.7, 0.3, s);
    for (const auto& step : rec.steps) {
      for (const auto& layer : step.gate_layers) {
        std::set<uint32_t> used;
        for (const auto& [a, b] : layer) {
          ASSERT_NE(a, b);
          ASSERT_TRUE(used.insert(a).second);
          ASSERT_TRUE(used.insert(b).second);
        }
      }
      ASSERT_TRUE(std::is_sorted(step.measured.begin(), step.measured.end()));
    }
  }
}

TEST(Circuits, SamplerIsDeterministicAndStreamsAreIndependent) {
  const Geometry g = Geometry::chain(16);
  EXPECT_EQ(sample_circuit(g, 6, 0.5, 0.5, 7), sample_circuit(g, 6, 0.5, 0.5, 7));
  EXPECT_NE(sample_circuit(g, 6, 0.5, 0.5, 7), sample_circuit(g, 6, 0.5, 0.5, 8));
  // Changing p_m must not move any gate.
  const CircuitRecord a = sample_circuit(g, 6, 0.5, 0.1, 7);
  const CircuitRecord b = sample_circuit(g, 6, 0.5, 0.9, 7);
  for (size_t t = 0; t < a.steps.size(); ++t) EXPECT_EQ(a.steps[t].gate_layers, b.steps[t].gate_layers);
  const CircuitRecord c = resample_measurements(a, 0.4, 99);
  for (size_t t = 0; t < a.steps.size(); ++t) EXPECT_EQ(a.steps[t].gate_layers, c.steps[t].gate_layers);
}

TEST(Circuits, RecordRoundTrip) {
  const CircuitRecord rec = sample_circuit(Geometry::square(4), 4, 0.6, 0.2, 3);
  std::stringstream io;
  write_record(io, rec, true);
  EXPECT_EQ(read_record(io), rec);
}

TEST(Circuits, ReplayIsIndependentOfTracking) {
  const CircuitRecord rec = sample_circuit(Geometry::chain(12), 10, 0.8, 0.3, 5);
  RunOptions tracked, plain;
  plain.track_colors = false;
  Rng r1(17), r2(17);
  const auto a = run(rec, ColoredTableau::initial_state(12, InitialFamily::Product, 0), tracked, r1);
  const auto b = run(rec, ColoredTableau::initial_state(12, InitialFamily::Product, 0), plain, r2);
  EXPECT_EQ(a.final_tableau->str(), b.final_tableau->str());
  EXPECT_EQ(a.trace.size(), 11u);
  EXPECT_TRUE(b.trace.empty());
}

TEST(Circuits, LazySamplerMatchesRecord) {
  const Geometry g = Geometry::chain(10);
  const CircuitRecord rec = sample_circuit(g, 8, 0.7, 0.2, 31);
  CircuitSampler sampler(g, 0.7, 0.2, 31);
  RunOptions opts;
  Rng r1(2), r2(2);
  const auto a = run(rec, ColoredTableau::initial_state(10, InitialFamily::Cat, 1), opts, r1);
  const auto b = run(sampler, 8, ColoredTableau::initial_state(10, InitialFamily::Cat, 1), opts, r2);
  EXPECT_EQ(a.final_tableau->str(), b.final_tableau->str());
  EXPECT_EQ(a.trace, b.trace);
}

TEST(Entanglement, KnownStates) {
  const ColoredTableau product = ColoredTableau::initial_state(8, InitialFamily::Product, 0);
  EXPECT_EQ(half_chain_entropy(product), 0);
  EXPECT_EQ(tripartite_mi(product), 0);
  const ColoredTableau cat = ColoredTableau::initial_state(8, InitialFamily::Cat, 0);
  EXPECT_EQ(entropy(cat, Region({0}, 8)), 1);
  EXPECT_EQ(entropy(cat, Region({0, 3, 5}, 8)), 1);
  EXPECT_EQ(entropy(cat, Region({}, 8)), 0);
  // GHZ: S_A = S_B = S_C = S_AB = ... = 1, so I_3 = 3 - 3 + 1 = 1.
  EXPECT_EQ(tripartite_mi(cat), 1);
  // One gate on (3,4) entangles the halves of a product state by one bit.
  ColoredTableau t = ColoredTableau::initial_state(8, InitialFamily::Product, 0);
  t.apply_xxzz(3, 4);
  EXPECT_EQ(half_chain_entropy(t), 1);
  EXPECT_EQ(entropy(t, Region::contiguous(6, 4, 8)), 0);  // sites 6, 7, 0, 1
}

TEST(Entanglement, RegionValidation) {
  EXPECT_THROW(Region({1, 1}, 4), std::invalid_argument);
  EXPECT_THROW(Region({4}, 4), std::out_of_range);
  EXPECT_EQ((Region({2}, 4) | Region({0}, 4)).sites(), (std::vector<uint32_t>{0, 2}));
  EXPECT_THROW(tripartite_mi(ColoredTableau::initial_state(6, InitialFamily::Product, 0)), std::invalid_argument);
}

TEST(Entanglement, BoundsSymmetryAndDenseOracle) {
  const auto r = testing::check_entropy_properties(60, 13);
  EXPECT_TRUE(r.passed) << r.detail;
}

}  // namespace
}  // namespace dynsyn
