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


#include "dynsyn/tableau.h"

#include <sstream>
#include <stdexcept>

#include "dynsyn/gf2.h"

namespace dynsyn {

int family_bits(InitialFamily family) { return family == InitialFamily::Bell ? 2 : 1; }

const char* family_name(InitialFamily family) {
  switch (family) {
    case InitialFamily::Product:
      return "product";
    case InitialFamily::Cat:
      return "cat";
    case InitialFamily::Bell:
      return "bell";
  }
  return "?";
}

InitialFamily parse_family(const std::string& name) {
  if (name == "product") return InitialFamily::Product;
  if (name == "cat") return InitialFamily::Cat;
  if (name == "bell") return InitialFamily::Bell;
  throw std::invalid_argument("unknown initial-state family '" + name + "' (expected product, cat or bell)");
}

ColoredTableau::ColoredTableau(size_t num_qubits) : n_(num_qubits), colors_(num_qubits, ColorTag::trivial()) {
  if (num_qubits == 0) {
    throw std::invalid_argument("ColoredTableau: need at least one qubit");
  }
  destabs_.reserve(n_);
  stabs_.reserve(n_);
  for (size_t i = 0; i < n_; ++i) {
    destabs_.push_back(PauliString::single(n_, i, 'X'));
    stabs_.push_back(PauliString::single(n_, i, 'Z'));
  }
}

ColoredTableau ColoredTableau::from_rows(std::vector<PauliString> destabilizers, std::vector<PauliString> stabilizers,
                                         std::vector<ColorTag> colors) {
  const size_t n = stabilizers.size();
  if (n == 0 || destabilizers.size() != n || colors.size() != n) {
    throw std::invalid_argument("ColoredTableau::from_rows: row counts disagree");
  }
  for (size_t i = 0; i < n; ++i) {
    if (stabilizers[i].num_qubits() != n || destabilizers[i].num_qubits() != n) {
      throw std::invalid_argument("ColoredTableau::from_rows: rows must have one site per generator");
    }
  }
  ColoredTableau t(n);
  t.destabs_ = std::move(destabilizers);
  t.stabs_ = std::move(stabilizers);
  t.colors_ = std::move(colors);
  if (std::string problem = t.check_invariants(); !problem.empty()) {
    throw std::invalid_argument("ColoredTableau::from_rows: " + problem);
  }
  return t;
}

ColoredTableau ColoredTableau::initial_state(size_t num_qubits, InitialFamily family, uint32_t logical) {
  const int bits = family_bits(family);
  if (logical >= (1u << bits)) {
    throw std::invalid_argument("initial_state: logical value out of range for family");
  }
  if (num_qubits < 2) {
    throw std::invalid_argument("initial_state: need at least two qubits");
  }
  if (family == InitialFamily::Bell && num_qubits % 2 != 0) {
    throw std::invalid_argument("initial_state: bell family needs an even number of qubits");
  }
  const size_t n = num_qubits;
  ColoredTableau t(n);
  if (family == InitialFamily::Product) {
    for (size_t i = 0; i < n; ++i) {
      t.destabs_[i] = PauliString::single(n, i, 'Z');
      t.stabs_[i] = PauliString::single(n, i, 'X');
      t.stabs_[i].set_sign(logical & 1);
      t.colors_[i] = ColorTag::correlated(1);
    }
    return t;
  }

  // Cat and Bell share the generator set {Z_i Z_{i+1}} + {prod X}.
  const bool zz_negative = family == InitialFamily::Bell && (logical & 1);
  const bool xx_negative = family == InitialFamily::Bell ? ((logical >> 1) & 1) : (logical & 1);
  const ColorTag zz_color = family == InitialFamily::Bell ? ColorTag::correlated(1) : ColorTag::trivial();
  const ColorTag xx_color = ColorTag::correlated(family == InitialFamily::Bell ? 2 : 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    PauliString zz(n);
    zz.set_z(i, true);
    zz.set_z(i + 1, true);
    zz.set_sign(zz_negative);
    PauliString tail(n);
    for (size_t j = i + 1; j < n; ++j) {
      tail.set_x(j, true);
    }
    t.stabs_[i] = zz;
    t.destabs_[i] = tail;
    t.colors_[i] = zz_color;
  }
  PauliString all_x(n);
  for (size_t j = 0; j < n; ++j) {
    all_x.set_x(j, true);
  }
  all_x.set_sign(xx_negative);
  t.stabs_[n - 1] = all_x;
  t.destabs_[n - 1] = PauliString::single(n, 0, 'Z');
  t.colors_[n - 1] = xx_color;
  return t;
}

void ColoredTableau::apply_xxzz(uint32_t a, uint32_t b) {
  const auto& table = xxzz_table();
  const size_t wa = a >> 6, wb = b >> 6;
  const uint64_t ba = uint64_t{1} << (a & 63), bb = uint64_t{1} << (b & 63);
  auto update = [&](PauliString& row) {
    uint64_t* xs = row.xs().data();
    uint64_t* zs = row.zs().data();
    const unsigned index =
        ((xs[wa] & ba) ? 1u : 0u) | ((zs[wa] & ba) ? 2u : 0u) | ((xs[wb] & bb) ? 4u : 0u) | ((zs[wb] & bb) ? 8u : 0u);
    if (index == 0) {
      return;
    }
    const auto& entry = table[index];
    xs[wa] = (entry.image & 1) ? (xs[wa] | ba) : (xs[wa] & ~ba);
    zs[wa] = (entry.image & 2) ? (zs[wa] | ba) : (zs[wa] & ~ba);
    xs[wb] = (entry.image & 4) ? (xs[wb] | bb) : (xs[wb] & ~bb);
    zs[wb] = (entry.image & 8) ? (zs[wb] | bb) : (zs[wb] & ~bb);
    if (entry.negate) {
      row.set_phase(row.phase() + 2);
    }
  };
  for (auto& row : destabs_) {
    update(row);
  }
  for (auto& row : stabs_) {
    update(row);
  }
}

void ColoredTableau::apply_gate(const CliffordGate& gate) {
  if (gate.kind != GateKind::TwoSiteXXZZ) {
    throw std::invalid_argument("apply_gate: unsupported gate kind");
  }
  if (gate.a == gate.b || gate.a >= n_ || gate.b >= n_) {
    throw std::out_of_range("apply_gate: invalid gate sites");
  }
  apply_xxzz(gate.a, gate.b);
}

size_t ColoredTableau::find_pivot_for_x(size_t site, PivotPolicy policy) {
  if (site >= n_) {
    throw std::out_of_range("measure_x: site out of range");
  }
  const size_t w = site >> 6;
  const uint64_t bit = uint64_t{1} << (site & 63);
  anticommuting_.clear();
  candidate_colors_.clear();
  for (size_t k = 0; k < n_; ++k) {
    if (stabs_[k].zs()[w] & bit) {
      anticommuting_.push_back(k);
      candidate_colors_.push_back(colors_[k]);
      if (policy == PivotPolicy::FirstAnticommuting) {
        break;
      }
    }
  }
  if (anticommuting_.empty()) {
    return kNoPivot;
  }
  if (policy == PivotPolicy::FirstAnticommuting) {
    // Collect the rest of the anticommuting rows without reordering.
    for (size_t k = anticommuting_.front() + 1; k < n_; ++k) {
      if (stabs_[k].zs()[w] & bit) {
        anticommuting_.push_back(k);
      }
    }
    return 0;
  }
  return select_pivot(candidate_colors_);
}

int8_t ColoredTableau::deterministic_x_outcome(size_t site) const {
  const size_t w = site >> 6;
  const uint64_t bit = uint64_t{1} << (site & 63);
  PauliString scratch(n_);
  for (size_t k = 0; k < n_; ++k) {
    if (destabs_[k].zs()[w] & bit) {
      scratch *= stabs_[k];
    }
  }
  return scratch.sign() ? -1 : 1;
}

void ColoredTableau::collapse_x(size_t site, size_t pivot_slot, bool negative) {
  const size_t p = anticommuting_[pivot_slot];
  const ColorTag pivot_color = colors_[p];
  for (size_t slot = 0; slot < anticommuting_.size(); ++slot) {
    if (slot == pivot_slot) {
      continue;
    }
    const size_t k = anticommuting_[slot];
    stabs_[k] *= stabs_[p];
    colors_[k] = multiply_colors(colors_[k], pivot_color);
  }
  const size_t w = site >> 6;
  const uint64_t bit = uint64_t{1} << (site & 63);
  for (size_t i = 0; i < n_; ++i) {
    if (i != p && (destabs_[i].zs()[w] & bit)) {
      destabs_[i] *= stabs_[p];
    }
  }
  destabs_[p] = stabs_[p];
  PauliString measured = PauliString::single(n_, site, 'X');
  measured.set_sign(negative);
  stabs_[p] = std::move(measured);
  colors_[p] = ColorTag::randomized();
}

int ColoredTableau::expectation(const PauliString& s) const {
  if (s.num_qubits() != n_) {
    throw std::invalid_argument("expectation: size mismatch");
  }
  if (!s.is_hermitian()) {
    throw std::invalid_argument("expectation: observable must be Hermitian");
  }
  for (const auto& row : stabs_) {
    if (!row.commutes(s)) {
      return 0;
    }
  }
  PauliString scratch(n_);
  for (size_t k = 0; k < n_; ++k) {
    if (!destabs_[k].commutes(s)) {
      scratch *= stabs_[k];
    }
  }
  if (!scratch.same_support(s)) {
    throw std::logic_error("expectation: stabilizer decomposition failed; tableau is corrupt");
  }
  return scratch.phase() == s.phase() ? 1 : -1;
}

std::string ColoredTableau::check_invariants() const {
  std::ostringstream out;
  if (stabs_.size() != n_ || destabs_.size() != n_ || colors_.size() != n_) {
    return "row count mismatch";
  }
  for (size_t i = 0; i < n_; ++i) {
    if (!stabs_[i].is_hermitian()) {
      out << "stabilizer " << i << " has a non-real sign";
      return out.str();
    }
    for (size_t j = 0; j < n_; ++j) {
      if (j > i && !stabs_[i].commutes(stabs_[j])) {
        out << "stabilizers " << i << " and " << j << " anticommute";
        return out.str();
      }
      if (j > i && !destabs_[i].commutes(destabs_[j])) {
        out << "destabilizers " << i << " and " << j << " anticommute";
        return out.str();
      }
      if (destabs_[i].commutes(stabs_[j]) != (i != j)) {
        out << "destabilizer " << i << " vs stabilizer " << j << " has the wrong commutation";
        return out.str();
      }
    }
  }
  BitMatrix m(2 * n_, 2 * n_);
  for (size_t r = 0; r < 2 * n_; ++r) {
    const PauliString& row = r < n_ ? destabs_[r] : stabs_[r - n_];
    for (size_t q = 0; q < n_; ++q) {
      m.set(r, q, row.x(q));
      m.set(r, n_ + q, row.z(q));
    }
  }
  if (m.rank_in_place() != 2 * n_) {
    return "rows are not independent";
  }
  return {};
}

std::string ColoredTableau::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < n_; ++i) {
    out << "D " << destabs_[i].str() << "   S " << stabs_[i].str() << "  " << colors_[i].str() << '\n';
  }
  return out.str();
}

}  // namespace dynsyn
