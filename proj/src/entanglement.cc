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


#include "dynsyn/entanglement.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "dynsyn/gf2.h"

namespace dynsyn {

Region::Region(std::vector<uint32_t> sites, size_t num_qubits) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
    throw std::invalid_argument("Region: duplicate site");
  }
  if (!sites_.empty() && sites_.back() >= num_qubits) {
    throw std::out_of_range("Region: site out of range");
  }
}

Region Region::contiguous(uint32_t begin, uint32_t length, size_t num_qubits) {
  if (length > num_qubits) {
    throw std::invalid_argument("Region::contiguous: longer than the system");
  }
  std::vector<uint32_t> sites;
  sites.reserve(length);
  for (uint32_t k = 0; k < length; ++k) {
    sites.push_back(static_cast<uint32_t>((begin + k) % num_qubits));
  }
  return Region(std::move(sites), num_qubits);
}

Region operator|(const Region& a, const Region& b) {
  Region out;
  std::set_union(a.sites_.begin(), a.sites_.end(), b.sites_.begin(), b.sites_.end(), std::back_inserter(out.sites_));
  return out;
}

int entropy(const ColoredTableau& state, const Region& region) {
  const size_t k = region.size();
  if (k == 0) {
    return 0;
  }
  const size_t n = state.num_qubits();
  if (region.sites().back() >= n) {
    throw std::out_of_range("entropy: region does not fit the state");
  }
  BitMatrix m(n, 2 * k);
  const auto& sites = region.sites();
  for (size_t r = 0; r < n; ++r) {
    const PauliString& row = state.stabilizer(r);
    for (size_t c = 0; c < k; ++c) {
      if (row.x(sites[c])) m.set(r, c, true);
      if (row.z(sites[c])) m.set(r, k + c, true);
    }
  }
  return static_cast<int>(m.rank_in_place()) - static_cast<int>(k);
}

int tripartite_mi(const ColoredTableau& state) {
  const size_t n = state.num_qubits();
  if (n % 4 != 0) {
    throw std::invalid_argument("tripartite_mi: L must be divisible by 4");
  }
  const auto q = static_cast<uint32_t>(n / 4);
  const Region a = Region::contiguous(0, q, n);
  const Region b = Region::contiguous(q, q, n);
  const Region c = Region::contiguous(2 * q, q, n);
  return entropy(state, a) + entropy(state, b) + entropy(state, c) - entropy(state, a | b) - entropy(state, a | c) -
         entropy(state, b | c) + entropy(state, a | b | c);
}

int half_chain_entropy(const ColoredTableau& state) {
  const size_t n = state.num_qubits();
  if (n % 2 != 0) {
    throw std::invalid_argument("half_chain_entropy: L must be even");
  }
  return entropy(state, Region::contiguous(0, static_cast<uint32_t>(n / 2), n));
}

}  // namespace dynsyn
