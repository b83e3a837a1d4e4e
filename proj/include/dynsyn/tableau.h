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


#ifndef DYNSYN_TABLEAU_H
#define DYNSYN_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dynsyn/clifford.h"
#include "dynsyn/pauli.h"
#include "dynsyn/signcolor.h"

namespace dynsyn {

/// Initial-state families that encode n logical bits into stabilizer signs.
enum class InitialFamily : uint8_t {
  /// |+>^L or |->^L; every X_i sign is correlated. n = 1.
  Product,
  /// (|0..0> +- |1..1>)/sqrt2; Z_iZ_{i+1} trivial, prod X_i correlated. n = 1.
  Cat,
  /// Four GHZ-type states; Z_iZ_{i+1} signs carry bit 0, prod X_i carries bit 1. n = 2.
  Bell,
};

int family_bits(InitialFamily family);
const char* family_name(InitialFamily family);
InitialFamily parse_family(const std::string& name);

enum class PivotPolicy : uint8_t {
  /// Trivial, then correlated, then randomized; lowest row index within a class.
  SignColor,
  /// Lowest anticommuting row index regardless of color.
  FirstAnticommuting,
};

struct Measurement {
  int8_t outcome = 1;  // +1 or -1
  bool deterministic = true;
};

/// Stabilizer tableau with destabilizers and one ColorTag per stabilizer sign.
///
/// Row i of the stabilizers pairs with row i of the destabilizers: they
/// anticommute, and each commutes with every other row of the opposite kind.
class ColoredTableau {
 public:
  /// |0..0> with trivial colors.
  explicit ColoredTableau(size_t num_qubits);

  /// Validates the rows (see check_invariants) before accepting them.
  static ColoredTableau from_rows(std::vector<PauliString> destabilizers, std::vector<PauliString> stabilizers,
                                  std::vector<ColorTag> colors);

  static ColoredTableau initial_state(size_t num_qubits, InitialFamily family, uint32_t logical);

  size_t num_qubits() const { return n_; }
  const PauliString& stabilizer(size_t i) const { return stabs_[i]; }
  const PauliString& destabilizer(size_t i) const { return destabs_[i]; }
  std::span<const PauliString> stabilizers() const { return stabs_; }
  std::span<const PauliString> destabilizers() const { return destabs_; }
  std::span<const ColorTag> colors() const { return colors_; }
  ColorTag color(size_t i) const { return colors_[i]; }
  ColorState color_state() const { return ColorState::from_tags(colors_); }

  /// Conjugates every row by the gate. Colors are untouched.
  void apply_gate(const CliffordGate& gate);
  void apply_xxzz(uint32_t a, uint32_t b);

  /// Projective measurement of X_site.
  ///
  /// `coin` is invoked only for a random outcome and decides the new sign
  /// (true means -1). A deterministic outcome leaves the tableau, including
  /// its colors, unchanged.
  template <typename CoinFn>
  Measurement measure_x(size_t site, CoinFn&& coin, PivotPolicy policy = PivotPolicy::SignColor) {
    const size_t pivot = find_pivot_for_x(site, policy);
    if (pivot == kNoPivot) {
      return {deterministic_x_outcome(site), true};
    }
    const bool negative = static_cast<bool>(coin());
    collapse_x(site, pivot, negative);
    return {static_cast<int8_t>(negative ? -1 : 1), false};
  }

  Measurement measure_x(size_t site, std::mt19937_64& rng, PivotPolicy policy = PivotPolicy::SignColor) {
    return measure_x(site, [&rng]() { return (rng() >> 63) != 0; }, policy);
  }

  /// +1 if s is in the stabilizer group, -1 if -s is, 0 otherwise.
  int expectation(const PauliString& s) const;

  /// Empty when all tableau invariants hold, else a description of the first violation.
  std::string check_invariants() const;

  std::string str() const;

 private:
  static constexpr size_t kNoPivot = static_cast<size_t>(-1);

  size_t find_pivot_for_x(size_t site, PivotPolicy policy);
  int8_t deterministic_x_outcome(size_t site) const;
  void collapse_x(size_t site, size_t pivot, bool negative);

  size_t n_;
  std::vector<PauliString> destabs_;
  std::vector<PauliString> stabs_;
  std::vector<ColorTag> colors_;
  // Scratch reused by measurements.
  std::vector<size_t> anticommuting_;
  std::vector<ColorTag> candidate_colors_;
};

}  // namespace dynsyn

#endif
