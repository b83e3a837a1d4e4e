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


#include "dynsyn/signcolor.h"

#include <algorithm>
#include <stdexcept>

namespace dynsyn {

std::string ColorTag::str() const {
  switch (kind_) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Randomized:
      return "randomized";
    case Kind::Correlated:
      break;
  }
  return "correlated(" + std::to_string(mask_) + ")";
}

size_t select_pivot(std::span<const ColorTag> anticommuting) {
  if (anticommuting.empty()) {
    throw std::invalid_argument("select_pivot: empty candidate list");
  }
  size_t best = 0;
  for (size_t i = 1; i < anticommuting.size(); ++i) {
    if (static_cast<int>(anticommuting[i].kind()) < static_cast<int>(anticommuting[best].kind())) {
      best = i;
      if (anticommuting[best].is_trivial()) {
        break;
      }
    }
  }
  return best;
}

ColorState ColorState::from_tags(std::span<const ColorTag> tags) {
  ColorState state;
  std::vector<uint16_t> masks;
  for (const ColorTag& tag : tags) {
    ++state.counts[static_cast<size_t>(tag.kind())];
    if (tag.is_correlated()) {
      masks.push_back(tag.mask());
    }
  }
  std::sort(masks.begin(), masks.end());
  for (uint16_t m : masks) {
    if (state.correlated_masks.empty() || state.correlated_masks.back().first != m) {
      state.correlated_masks.emplace_back(m, 0);
    }
    ++state.correlated_masks.back().second;
  }
  return state;
}

int mask_rank(std::span<const uint16_t> masks) {
  // Basis indexed by leading bit.
  std::array<uint16_t, kMaxColorBits> basis{};
  int rank = 0;
  for (uint16_t m : masks) {
    for (int bit = kMaxColorBits - 1; bit >= 0 && m != 0; --bit) {
      if (!((m >> bit) & 1)) {
        continue;
      }
      if (basis[bit] == 0) {
        basis[bit] = m;
        ++rank;
        m = 0;
      } else {
        m ^= basis[bit];
      }
    }
  }
  return rank;
}

bool is_decodable(const ColorState& state, int n_bits) {
  if (n_bits < 1 || n_bits > kMaxColorBits) {
    throw std::invalid_argument("is_decodable: n_bits must be in [1, 16]");
  }
  if (n_bits == 1) {
    return state.num_correlated() > 0;
  }
  std::vector<uint16_t> masks;
  masks.reserve(state.correlated_masks.size());
  for (const auto& [mask, count] : state.correlated_masks) {
    masks.push_back(mask);
  }
  return mask_rank(masks) == n_bits;
}

int randomization_time(std::span<const ColorState> trace, int n_bits) {
  for (size_t t = 0; t < trace.size(); ++t) {
    if (!is_decodable(trace[t], n_bits)) {
      return static_cast<int>(t);
    }
  }
  return kNeverRandomized;
}

}  // namespace dynsyn
