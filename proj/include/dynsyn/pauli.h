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


#ifndef DYNSYN_PAULI_H
#define DYNSYN_PAULI_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dynsyn {

inline constexpr size_t words_for_bits(size_t n) { return (n + 63) / 64; }

/// A Pauli string i^phase * P_0 (x) P_1 (x) ... on `num_qubits` qubits.
///
/// Each site stores an (x, z) bit pair: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
/// Y is the Hermitian Pauli matrix, so the string is Hermitian exactly when
/// `phase` is even, and a stabilizer sign of -1 is `phase == 2`.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t num_qubits);

  /// Parses strings like "+XYZ_", "-ZZ", "iX". A leading sign is optional;
  /// '_' and 'I' both denote the identity.
  static PauliString from_string(std::string_view text);
  static PauliString single(size_t num_qubits, size_t site, char pauli);

  size_t num_qubits() const { return num_qubits_; }
  size_t num_words() const { return xs_.size(); }

  bool x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
  bool z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
  void set_x(size_t q, bool v);
  void set_z(size_t q, bool v);
  /// One of 'I', 'X', 'Y', 'Z'.
  char pauli_at(size_t q) const;
  void set_pauli(size_t q, char pauli);

  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t p) { phase_ = p & 3; }
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// True for a -1 sign. Only meaningful for Hermitian strings.
  bool sign() const { return phase_ == 2; }
  void set_sign(bool negative) { phase_ = negative ? 2 : 0; }

  bool is_identity() const;
  size_t weight() const;
  bool commutes(const PauliString& other) const;

  /// this <- this * rhs, with the phase tracked mod 4.
  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }

  /// Same X/Z support, phase ignored.
  bool same_support(const PauliString& other) const { return xs_ == other.xs_ && zs_ == other.zs_; }
  bool operator==(const PauliString& other) const = default;

  std::string str() const;

  std::vector<uint64_t>& xs() { return xs_; }
  std::vector<uint64_t>& zs() { return zs_; }
  const std::vector<uint64_t>& xs() const { return xs_; }
  const std::vector<uint64_t>& zs() const { return zs_; }

 private:
  size_t num_qubits_ = 0;
  std::vector<uint64_t> xs_;
  std::vector<uint64_t> zs_;
  uint8_t phase_ = 0;
};

/// Exponent of i (mod 4) produced when multiplying the site Paulis of
/// (x1, z1) by those of (x2, z2), summed over all bit lanes of one word.
inline int product_phase_word(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2) {
  // Per site: XY=iZ, YZ=iX, ZX=iY contribute +1; the reversed orders contribute -1.
  const uint64_t plus = (x1 & z1 & z2 & ~x2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
  const uint64_t minus = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
  return std::popcount(plus) - std::popcount(minus);
}

}  // namespace dynsyn

#endif
