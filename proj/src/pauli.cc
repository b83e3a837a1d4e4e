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


#include "dynsyn/pauli.h"

#include <stdexcept>

namespace dynsyn {

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for_bits(num_qubits), 0), zs_(words_for_bits(num_qubits), 0) {}

PauliString PauliString::from_string(std::string_view text) {
  uint8_t phase = 0;
  size_t pos = 0;
  while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || text[pos] == 'i')) {
    if (text[pos] == '-') {
      phase += 2;
    } else if (text[pos] == 'i') {
      phase += 1;
    }
    ++pos;
  }
  PauliString result(text.size() - pos);
  for (size_t q = 0; pos < text.size(); ++pos, ++q) {
    result.set_pauli(q, text[pos]);
  }
  result.set_phase(phase);
  return result;
}

PauliString PauliString::single(size_t num_qubits, size_t site, char pauli) {
  if (site >= num_qubits) {
    throw std::out_of_range("PauliString::single: site out of range");
  }
  PauliString result(num_qubits);
  result.set_pauli(site, pauli);
  return result;
}

void PauliString::set_x(size_t q, bool v) {
  const uint64_t bit = uint64_t{1} << (q & 63);
  xs_[q >> 6] = v ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
}

void PauliString::set_z(size_t q, bool v) {
  const uint64_t bit = uint64_t{1} << (q & 63);
  zs_[q >> 6] = v ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

char PauliString::pauli_at(size_t q) const {
  static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
  return kChars[x(q) | (z(q) << 1)];
}

void PauliString::set_pauli(size_t q, char pauli) {
  switch (pauli) {
    case 'I':
    case '_':
      set_x(q, false);
      set_z(q, false);
      break;
    case 'X':
      set_x(q, true);
      set_z(q, false);
      break;
    case 'Y':
      set_x(q, true);
      set_z(q, true);
      break;
    case 'Z':
      set_x(q, false);
      set_z(q, true);
      break;
    default:
      throw std::invalid_argument(std::string("unrecognized Pauli character '") + pauli + "'");
  }
}

bool PauliString::is_identity() const {
  for (size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) {
      return false;
    }
  }
  return true;
}

size_t PauliString::weight() const {
  size_t total = 0;
  for (size_t w = 0; w < xs_.size(); ++w) {
    total += std::popcount(xs_[w] | zs_[w]);
  }
  return total;
}

bool PauliString::commutes(const PauliString& other) const {
  uint64_t acc = 0;
  for (size_t w = 0; w < xs_.size(); ++w) {
    acc ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
  }
  return (std::popcount(acc) & 1) == 0;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("PauliString product: size mismatch");
  }
  int log_i = phase_ + rhs.phase_;
  for (size_t w = 0; w < xs_.size(); ++w) {
    log_i += product_phase_word(xs_[w], zs_[w], rhs.xs_[w], rhs.zs_[w]);
    xs_[w] ^= rhs.xs_[w];
    zs_[w] ^= rhs.zs_[w];
  }
  phase_ = static_cast<uint8_t>(log_i & 3);
  return *this;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (size_t q = 0; q < num_qubits_; ++q) {
    const char c = pauli_at(q);
    out += c == 'I' ? '_' : c;
  }
  return out;
}

}  // namespace dynsyn
