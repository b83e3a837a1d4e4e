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


#ifndef DYNSYN_SIGNCOLOR_H
#define DYNSYN_SIGNCOLOR_H

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dynsyn {

inline constexpr int kMaxColorBits = 16;

/// Label of a stabilizer sign relative to the encoded logical bits.
///
/// A correlated tag carries a nonzero n-bit mask: the sign equals a fixed
/// value times (-1)^(popcount(mask & logical)). A zero mask is trivial.
class ColorTag {
 public:
  enum class Kind : uint8_t { Trivial = 0, Correlated = 1, Randomized = 2 };

  constexpr ColorTag() = default;
  static constexpr ColorTag trivial() { return ColorTag(Kind::Trivial, 0); }
  static constexpr ColorTag randomized() { return ColorTag(Kind::Randomized, 0); }
  static constexpr ColorTag correlated(uint16_t mask) {
    return mask == 0 ? trivial() : ColorTag(Kind::Correlated, mask);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr uint16_t mask() const { return mask_; }
  constexpr bool is_trivial() const { return kind_ == Kind::Trivial; }
  constexpr bool is_correlated() const { return kind_ == Kind::Correlated; }
  constexpr bool is_randomized() const { return kind_ == Kind::Randomized; }

  constexpr bool operator==(const ColorTag&) const = default;

  std::string str() const;

 private:
  constexpr ColorTag(Kind kind, uint16_t mask) : kind_(kind), mask_(mask) {}

  Kind kind_ = Kind::Trivial;
  uint16_t mask_ = 0;
};

/// Color of the product of two signs.
constexpr ColorTag multiply_colors(ColorTag a, ColorTag b) {
  if (a.is_randomized() || b.is_randomized()) {
    return ColorTag::randomized();
  }
  return ColorTag::correlated(static_cast<uint16_t>(a.mask() ^ b.mask()));
}

/// Pivot for a random measurement: the lowest index among the trivial tags,
/// else among the correlated tags, else among the randomized ones.
size_t select_pivot(std::span<const ColorTag> anticommuting);

/// Aggregate coloring of a tableau at one instant.
struct ColorState {
  /// Indexed by ColorTag::Kind.
  std::array<uint32_t, 3> counts{};
  /// Distinct correlated masks with their multiplicities, sorted by mask.
  std::vector<std::pair<uint16_t, uint32_t>> correlated_masks;

  static ColorState from_tags(std::span<const ColorTag> tags);

  uint32_t total() const { return counts[0] + counts[1] + counts[2]; }
  uint32_t num_trivial() const { return counts[0]; }
  uint32_t num_correlated() const { return counts[1]; }
  uint32_t num_randomized() const { return counts[2]; }

  bool operator==(const ColorState&) const = default;
};

/// GF(2) rank of a set of masks.
int mask_rank(std::span<const uint16_t> masks);

/// True iff the correlated masks present span all n logical bits.
bool is_decodable(const ColorState& state, int n_bits);

inline constexpr int kNeverRandomized = std::numeric_limits<int>::max();

/// First index at which the trace stops being decodable, or kNeverRandomized.
int randomization_time(std::span<const ColorState> trace, int n_bits);

}  // namespace dynsyn

#endif
