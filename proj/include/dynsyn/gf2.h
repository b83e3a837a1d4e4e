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


#ifndef DYNSYN_GF2_H
#define DYNSYN_GF2_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dynsyn {

/// Dense row-major matrix over GF(2), 64 columns per word.
class BitMatrix {
 public:
  BitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
  void set(size_t r, size_t c, bool v);

  uint64_t* row(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
  size_t words_per_row() const { return words_; }

  /// Rank by Gaussian elimination on a copy.
  size_t rank() const;
  /// Rank by Gaussian elimination in place (destroys the contents).
  size_t rank_in_place();

 private:
  size_t rows_;
  size_t cols_;
  size_t words_;
  std::vector<uint64_t> data_;
};

}  // namespace dynsyn

#endif
