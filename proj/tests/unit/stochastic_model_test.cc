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

#include <cmath>

#include "dynsyn/stochastic_model.h"

namespace dynsyn {
namespace {

// Reference values below were computed with 30-digit arithmetic from the
// defining sums, independently of this implementation.

TEST(StochasticModel, GeometricClock) {
  const GeometricValues v = geometric_pdf_cdf(0.25, 3);
  EXPECT_DOUBLE_EQ(v.pdf, 0.75 * 0.75 * 0.75 * 0.25);
  EXPECT_DOUBLE_EQ(v.cdf, 1 - std::pow(0.75, 4));
  EXPECT_NEAR(order_statistic_pdf(0.3, 10, 4), 0.0946019981396020479760991069034, 1e-14);
  double total = 0;
  for (int t = 0; t < 400; ++t) total += order_statistic_pdf(0.2, 64, t);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(StochasticModel, ClosedFormDecodability) {
  EXPECT_NEAR(closed_form_decodability(0.3, 100, 10), 0.864276755182319174690608702113, 1e-13);
  EXPECT_NEAR(closed_form_decodability(0.1, 1000, 50), 0.990430635047973206172249096921, 1e-13);
  EXPECT_NEAR(closed_form_decodability(0.5, 1u << 18, 18), 0.393469629504021520258271013928, 1e-12);
  EXPECT_EQ(closed_form_decodability(1.0, 100, 0), 0.0);
  EXPECT_EQ(closed_form_decodability(0.0, 100, 7), 1.0);
}

TEST(StochasticModel, MeanDepth) {
  EXPECT_NEAR(mean_Tr(0.5, 8, MeanMode::ExactSum), 3.42107772581558235011894860391, 1e-9);
  EXPECT_NEAR(mean_Tr(0.2, 64, MeanMode::ExactSum), 20.7593681321575270813370590617, 1e-9);
  EXPECT_NEAR(mean_Tr(0.05, 1000, MeanMode::ExactSum), 145.434686978638546830929543125, 1e-8);
  EXPECT_NEAR(mean_Tr(0.2, 64, MeanMode::HarmonicApprox), 20.7593681321575269832553205606, 1e-11);
  EXPECT_EQ(mean_Tr(1.0, 50, MeanMode::ExactSum), 0.0);
  EXPECT_THROW(mean_Tr(0.0, 50, MeanMode::ExactSum), std::domain_error);
  EXPECT_NEAR(harmonic_number(10), 2.92896825396825396825396825397, 1e-14);
  EXPECT_NEAR(harmonic_number(1000), 7.48547086055034491265651820433, 1e-12);
}

TEST(StochasticModel, HarmonicApproximationWithinTwoPercentForLargeL) {
  for (double P : {0.05, 0.1, 0.2, 0.4, 0.6, 0.8}) {
    for (uint64_t L : {32ull, 128ull, 1024ull, 1ull << 16}) {
      const double exact = mean_Tr(P, L, MeanMode::ExactSum);
      const double approx = mean_Tr(P, L, MeanMode::HarmonicApprox);
      EXPECT_LT(std::abs(approx - exact), 0.02 * exact) << "P=" << P << " L=" << L;
    }
  }
}

TEST(StochasticModel, CriticalPoint) {
  EXPECT_DOUBLE_EQ(critical_params(1).P_c, 0.5);
  EXPECT_DOUBLE_EQ(critical_params(2).P_c, 1 - std::sqrt(0.5));
  EXPECT_EQ(critical_params(3).nu, 1.0);
  EXPECT_NEAR(universal_G(0, 1), 0.393469340287366576396200465009, 1e-15);
  EXPECT_NEAR(universal_G(0.7, 2), 0.231071789772715186375584583209, 1e-15);
  EXPECT_NEAR(ul_threshold(1), 0.292893218813452475599155637895, 1e-15);
  EXPECT_NEAR(ul_threshold(2), 0.159103584746285456968874523767, 1e-15);
  // G decreases from 1 to 0 across the transition.
  EXPECT_GT(universal_G(-3, 1), 0.99);
  EXPECT_LT(universal_G(3, 1), 0.01);
}

TEST(StochasticModel, FiniteSizeConvergesToUniversalCurve) {
  const uint64_t L = 1ull << 18;
  const int T = 18;
  double worst = 0;
  for (double x = -2; x <= 2; x += 0.05) {
    const double P = 0.5 + x / T;
    worst = std::max(worst, std::abs(closed_form_decodability(P, L, T) - universal_G(x, 1)));
  }
  EXPECT_LT(worst, 0.02);
}

TEST(StochasticModel, SimulationMatchesClosedForms) {
  const StochasticParams params{0.3, 50, 1};
  const SimulationResult sim = simulate(params, 10, 200000, 42);
  EXPECT_EQ(sim.n_samples, 200000u);
  EXPECT_LT(std::abs(sim.decodability - closed_form_decodability(0.3, 50, 10)), 4 * sim.decodability_err);
  EXPECT_LT(std::abs(sim.mean - mean_Tr(0.3, 50, MeanMode::ExactSum)), 4 * sim.mean_err);
  const auto [d5, e5] = sim.decodability_at(5);
  EXPECT_LT(std::abs(d5 - closed_form_decodability(0.3, 50, 5)), 4 * e5);
}

TEST(StochasticModel, SimulationEdgeCasesAndWorkerInvariance) {
  const SimulationResult one = simulate({1.0, 30, 1}, 3, 1000, 1);
  EXPECT_EQ(one.mean, 0.0);
  EXPECT_EQ(one.decodability, 0.0);
  const SimulationResult zero = simulate({0.0, 30, 1}, 3, 1000, 1);
  EXPECT_EQ(zero.n_never, 1000u);
  EXPECT_EQ(zero.decodability, 1.0);
  const SimulationResult a = simulate({0.2, 64, 1}, 8, 20000, 5, 1);
  const SimulationResult b = simulate({0.2, 64, 1}, 8, 20000, 5, 3);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_THROW(simulate({1.5, 10, 1}, 3, 10, 1), std::invalid_argument);
}

TEST(StochasticModel, LogCoefficientFitRecoversPlantedParameters) {
  const double c = 0.4, a = 0.9, beta = 1.3;
  std::vector<double> p, y;
  for (double pm = 0.1; pm <= 0.95; pm += 0.05) {
    p.push_back(pm);
    y.push_back(log_coefficient_model(pm, c, a, beta));
  }
  const LogCoefficientFit fit = fit_log_coefficient(p, y);
  EXPECT_NEAR(fit.c, c, 1e-4);
  EXPECT_NEAR(fit.a, a, 1e-4);
  EXPECT_NEAR(fit.beta, beta, 1e-4);
  EXPECT_LT(fit.chi2, 1e-10);
  EXPECT_THROW(log_coefficient_model(0.0, c, a, beta), std::domain_error);
}

}  // namespace
}  // namespace dynsyn
