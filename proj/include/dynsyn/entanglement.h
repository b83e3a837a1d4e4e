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


#ifndef DYNSYN_ENTANGLEMENT_H
#define DYNSYN_ENTANGLEMENT_H

#include <cstdint>
#include <vector>

#include "dynsyn/tableau.h"

namespace dynsyn {

/// Sorted set of distinct site indices.
class Region {
 public:
  Region() = default;
  /// Sorts and validates; throws on duplicates or sites >= num_qubits.
  Region(std::vector<uint32_t> sites, size_t num_qubits);

  /// Sites [begin, begin + length) on a ring of num_qubits sites.
  static Region contiguous(uint32_t begin, uint32_t length, size_t num_qubits);

  const std::vector<uint32_t>& sites() const { return sites_; }
  size_t size() const { return sites_.size(); }

  friend Region operator|(const Region& a, const Region& b);

 private:
  std::vector<uint32_t> sites_;
};

/// Entanglement entropy of a pure stabilizer state in bits:
/// rank of the stabilizers restricted to the region minus |region|.
int entropy(const ColoredTableau& state, const Region& region);

/// I3(A:B:C) in bits for contiguous quarters A, B, C of a periodic chain.
int tripartite_mi(const ColoredTableau& state);

/// Entropy of sites [0, L/2).
int half_chain_entropy(const ColoredTableau& state);

inline constexpr double kLn2 = 0.69314718055994530942;

}  // namespace dynsyn

#endif
