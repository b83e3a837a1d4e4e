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

#include "dynsyn/clifford.h"
#include "dynsyn/pauli.h"
#include "dynsyn/rng.h"
#include "dynsyn/tableau.h"
#include "testing/selfcheck.h"
#include "testing/statevector.h"

namespace dynsyn {
namespace {

TEST(PauliString, ParsesAndPrints) {
  const PauliString p = PauliString::from_string("-XY_Z");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_EQ(p.pauli_at(0), 'X');
  EXPECT_EQ(p.pauli_at(1), 'Y');
  EXPECT_EQ(p.pauli_at(2), 'I');
  EXPECT_EQ(p.pauli_at(3), 'Z');
  EXPECT_TRUE(p.sign());
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(PauliString::from_string(p.str()), p);
}

TEST(PauliString, ProductPhases) {
  // XY = iZ, YX = -iZ, ZZ = I.
  PauliString xy = PauliString::from_string("X") * PauliString::from_string("Y");
  EXPECT_EQ(xy.pauli_at(0), 'Z');
  EXPECT_EQ(xy.phase(), 1);
  PauliString yx = PauliString::from_string("Y") * PauliString::from_string("X");
  EXPECT_EQ(yx.phase(), 3);
  PauliString zz = PauliString::from_string("Z") * PauliString::from_string("Z");
  EXPECT_TRUE(zz.is_identity());
  EXPECT_EQ(zz.phase(), 0);
  // (XX)(ZZ) = (XZ)(XZ) = (-iY)(-iY) = -YY.
  PauliString p = PauliString::from_string("XX") * PauliString::from_string("ZZ");
  EXPECT_EQ(p, PauliString::from_string("-YY"));
}

TEST(PauliString, Commutation) {
  EXPECT_TRUE(PauliString::from_string("XX").commutes(PauliString::from_string("ZZ")));
  EXPECT_FALSE(PauliString::from_string("XI").commutes(PauliString::from_string("ZI")));
  EXPECT_TRUE(PauliString::from_string("XYZ").commutes(PauliString::from_string("XYZ")));
}

TEST(PauliString, ProductAcrossWordBoundary) {
  PauliString a(130), b(130);
  a.set_pauli(64, 'X');
  a.set_pauli(129, 'Y');
  b.set_pauli(64, 'Y');
  b.set_pauli(129, 'X');
  const PauliString c = a * b;  // (XY)(YX) on two sites: (iZ)(-iZ)
  EXPECT_EQ(c.pauli_at(64), 'Z');
  EXPECT_EQ(c.pauli_at(129), 'Z');
  EXPECT_EQ(c.phase(), 0);
}

// Images of every two-qubit Pauli under exp[-i pi/4 (XX + ZZ)], computed
// independently with a dense matrix exponential (first letter on qubit a).
TEST(Clifford, FrozenConjugationImages) {
  const std::pair<const char*, const char*> expected[] = {
      {"II", "+II"}, {"IX", "+ZY"}, {"IY", "+YI"}, {"IZ", "-XY"}, {"XI", "+YZ"}, {"XX", "+XX"},
      {"XY", "+IZ"}, {"XZ", "+ZX"}, {"YI", "+IY"}, {"YX", "+ZI"}, {"YY", "+YY"}, {"YZ", "-XI"},
      {"ZI", "-YX"}, {"ZX", "+XZ"}, {"ZY", "-IX"}, {"ZZ", "+ZZ"},
  };
  for (const auto& [in, out] : expected) {
    const PauliString image = conjugate_pauli({GateKind::TwoSiteXXZZ, 0, 1}, PauliString::from_string(in));
    EXPECT_EQ(image, PauliString::from_string(out)) << in;
  }
}

TEST(Clifford, MatchesDenseMatrixIncludingPhases) {
  const auto r = testing::check_conjugation_table();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Clifford, GateOnNonAdjacentSitesAndReversedOrder) {
  // U_ab is symmetric in a and b.
  PauliString p = PauliString::from_string("XIIZ");
  const PauliString ab = conjugate_pauli({GateKind::TwoSiteXXZZ, 0, 3}, p);
  const PauliString ba = conjugate_pauli({GateKind::TwoSiteXXZZ, 3, 0}, p);
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.pauli_at(1), 'I');
  EXPECT_EQ(ab.pauli_at(2), 'I');
}

TEST(Tableau, InitialFamiliesAreValid) {
  for (InitialFamily f : {InitialFamily::Product, InitialFamily::Cat, InitialFamily::Bell}) {
    for (uint32_t logical = 0; logical < (1u << family_bits(f)); ++logical) {
      const ColoredTableau t = ColoredTableau::initial_state(8, f, logical);
      EXPECT_EQ(t.check_invariants(), "") << family_name(f) << " " << logical;
    }
  }
  const ColoredTableau minus = ColoredTableau::initial_state(4, InitialFamily::Product, 1);
  EXPECT_EQ(minus.expectation(PauliString::from_string("XIII")), -1);
  EXPECT_EQ(minus.expectation(PauliString::from_string("XXXX")), 1);
  EXPECT_EQ(minus.expectation(PauliString::from_string("ZIII")), 0);
  const ColoredTableau cat = ColoredTableau::initial_state(4, InitialFamily::Cat, 1);
  EXPECT_EQ(cat.expectation(PauliString::from_string("XXXX")), -1);
  EXPECT_EQ(cat.expectation(PauliString::from_string("ZIIZ")), 1);
  const ColoredTableau bell = ColoredTableau::initial_state(4, InitialFamily::Bell, 3);
  EXPECT_EQ(bell.expectation(PauliString::from_string("ZZII")), -1);
  EXPECT_EQ(bell.expectation(PauliString::from_string("XXXX")), -1);
}

TEST(Tableau, InitialFamilyRejectsBadArguments) {
  EXPECT_THROW(ColoredTableau::initial_state(4, InitialFamily::Product, 2), std::invalid_argument);
  EXPECT_THROW(ColoredTableau::initial_state(5, InitialFamily::Bell, 0), std::invalid_argument);
  EXPECT_THROW(ColoredTableau::initial_state(1, InitialFamily::Cat, 0), std::invalid_argument);
}

TEST(Tableau, DeterministicMeasurementLeavesStateAlone) {
  ColoredTableau t = ColoredTableau::initial_state(4, InitialFamily::Product, 1);
  const std::string before = t.str();
  int coin_calls = 0;
  const Measurement m = t.measure_x(2, [&] {
    ++coin_calls;
    return false;
  });
  EXPECT_TRUE(m.deterministic);
  EXPECT_EQ(m.outcome, -1);
  EXPECT_EQ(coin_calls, 0);
  EXPECT_EQ(t.str(), before);
}

TEST(Tableau, RandomMeasurementUsesCoinAndIsRepeatable) {
  ColoredTableau t(2);  // |00>, X outcomes are random
  const Measurement first = t.measure_x(0, [] { return true; });
  EXPECT_FALSE(first.deterministic);
  EXPECT_EQ(first.outcome, -1);
  EXPECT_EQ(t.expectation(PauliString::from_string("XI")), -1);
  EXPECT_TRUE(t.color(0).is_randomized() || t.color(1).is_randomized());
  const Measurement again = t.measure_x(0, [] { return false; });
  EXPECT_TRUE(again.deterministic);
  EXPECT_EQ(again.outcome, -1);
  EXPECT_EQ(t.check_invariants(), "");
}

TEST(Tableau, GateThenMeasurementOnProductState) {
  // U maps X_0 to Y_0 Z_1, so after U the single-site X_0 is no longer stabilized.
  ColoredTableau t = ColoredTableau::initial_state(2, InitialFamily::Product, 0);
  t.apply_xxzz(0, 1);
  EXPECT_EQ(t.expectation(PauliString::from_string("YZ")), 1);
  EXPECT_EQ(t.expectation(PauliString::from_string("XX")), 1);
  Rng rng(3);
  const Measurement m = t.measure_x(0, rng);
  EXPECT_FALSE(m.deterministic);
  EXPECT_EQ(t.check_invariants(), "");
  // The global symmetry survives every X measurement.
  EXPECT_EQ(t.expectation(PauliString::from_string("XX")), 1);
}

TEST(Tableau, FromRowsRejectsNonCommutingStabilizers) {
  std::vector<PauliString> d = {PauliString::from_string("ZI"), PauliString::from_string("IZ")};
  std::vector<PauliString> s = {PauliString::from_string("XI"), PauliString::from_string("ZI")};
  EXPECT_THROW(ColoredTableau::from_rows(d, s, {ColorTag::trivial(), ColorTag::trivial()}), std::invalid_argument);
}

TEST(Tableau, AgreesWithStateVectorOracle) {
  const auto r = testing::check_tableau_oracle(120, 77);
  EXPECT_TRUE(r.passed) << r.detail;
}

}  // namespace
}  // namespace dynsyn
