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


#include "dynsyn/clifford.h"

#include <stdexcept>

namespace dynsyn {

namespace {

PauliString decode_two_site(unsigned index) {
  PauliString p(2);
  p.set_x(0, index & 1);
  p.set_z(0, (index >> 1) & 1);
  p.set_x(1, (index >> 2) & 1);
  p.set_z(1, (index >> 3) & 1);
  return p;
}

// exp(-i pi/4 P) Q exp(+i pi/4 P).
PauliString rotate_by(const PauliString& generator, const PauliString& q) {
  if (q.commutes(generator)) {
    return q;
  }
  PauliString result = generator * q;
  result.set_phase(result.phase() + 3);  // times -i
  return result;
}

TwoQubitConjugationTable build_xxzz_table() {
  const PauliString xx = PauliString::from_string("XX");
  const PauliString zz = PauliString::from_string("ZZ");
  TwoQubitConjugationTable table;
  for (unsigned index = 0; index < 16; ++index) {
    const PauliString image = rotate_by(xx, rotate_by(zz, decode_two_site(index)));
    if (!image.is_hermitian()) {
      throw std::logic_error("xxzz_table: conjugation produced a non-Hermitian image");
    }
    table.entries[index] = {static_cast<uint8_t>(two_site_index(image, 0, 1)), image.sign()};
  }
  return table;
}

}  // namespace

const TwoQubitConjugationTable& xxzz_table() {
  static const TwoQubitConjugationTable table = build_xxzz_table();
  return table;
}

PauliString conjugate_pauli(const CliffordGate& gate, const PauliString& p) {
  if (gate.kind != GateKind::TwoSiteXXZZ) {
    throw std::invalid_argument("conjugate_pauli: unsupported gate kind");
  }
  if (gate.a == gate.b || gate.a >= p.num_qubits() || gate.b >= p.num_qubits()) {
    throw std::out_of_range("conjugate_pauli: invalid gate sites");
  }
  const auto& entry = xxzz_table()[two_site_index(p, gate.a, gate.b)];
  PauliString result = p;
  result.set_x(gate.a, entry.image & 1);
  result.set_z(gate.a, (entry.image >> 1) & 1);
  result.set_x(gate.b, (entry.image >> 2) & 1);
  result.set_z(gate.b, (entry.image >> 3) & 1);
  if (entry.negate) {
    result.set_phase(result.phase() + 2);
  }
  return result;
}

}  // namespace dynsyn
