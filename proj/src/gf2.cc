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


#include "dynsyn/gf2.h"

#include <algorithm>

namespace dynsyn {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

void BitMatrix::set(size_t r, size_t c, bool v) {
  uint64_t& word = row(r)[c >> 6];
  const uint64_t bit = uint64_t{1} << (c & 63);
  word = v ? (word | bit) : (word & ~bit);
}

size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rank_in_place();
}

size_t BitMatrix::rank_in_place() {
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const size_t w = c >> 6;
    const uint64_t bit = uint64_t{1} << (c & 63);
    size_t pivot = rank;
    while (pivot < rows_ && !(row(pivot)[w] & bit)) {
      ++pivot;
    }
    if (pivot == rows_) {
      continue;
    }
    if (pivot != rank) {
      std::swap_ranges(row(pivot), row(pivot) + words_, row(rank));
    }
    const uint64_t* src = row(rank);
    for (size_t r = rank + 1; r < rows_; ++r) {
      uint64_t* dst = row(r);
      if (dst[w] & bit) {
        // Only columns >= c are inspected again.
        for (size_t k = w; k < words_; ++k) {
          dst[k] ^= src[k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace dynsyn
