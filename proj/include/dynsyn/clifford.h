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


#ifndef DYNSYN_CLIFFORD_H
#define DYNSYN_CLIFFORD_H

#include <array>
#include <cstdint>

#include "dynsyn/pauli.h"

namespace dynsyn {

enum class GateKind : uint8_t {
  /// U_ij = exp[-i pi/4 (X_i X_j + Z_i Z_j)].
  TwoSiteXXZZ,
  /// Placeholder for a single-site basis change; not produced by any sampler.
  SingleSiteMeasurementBasisChange,
};

struct CliffordGate {
  GateKind kind = GateKind::TwoSiteXXZZ;
  uint32_t a = 0;
  uint32_t b = 0;
};

/// Action of a two-qubit Clifford on the 16 Hermitian two-qubit Paulis.
///
/// Entries are indexed by x_a | z_a << 1 | x_b << 2 | z_b << 3 and hold the
/// image in the same encoding plus whether the image picked up a -1 sign.
struct TwoQubitConjugationTable {
  struct Entry {
    uint8_t image = 0;
    bool negate = false;
  };
  std::array<Entry, 16> entries{};

  const Entry& operator[](unsigned index) const { return entries[index]; }
};

/// Table for exp[-i pi/4 (XX + ZZ)], generated on first use.
///
/// Built by composing V Q V^dag = -i P Q (for {P,Q} = 0, V = exp(-i pi/4 P))
/// for P = ZZ and then P = XX; both factors commute so the order is free.
const TwoQubitConjugationTable& xxzz_table();

/// U p U^dag for the gate's two sites; identity elsewhere. Phase tracked mod 4.
PauliString conjugate_pauli(const CliffordGate& gate, const PauliString& p);

/// Encodes the two-site restriction of p used to index the table.
inline unsigned two_site_index(const PauliString& p, uint32_t a, uint32_t b) {
  return p.x(a) | (p.z(a) << 1) | (p.x(b) << 2) | (p.z(b) << 3);
}

}  // namespace dynsyn

#endif
