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


#ifndef DYNSYN_TESTING_STATEVECTOR_H
#define DYNSYN_TESTING_STATEVECTOR_H

// Dense reference simulator. Qubit k is bit k of the basis index.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dynsyn/pauli.h"

namespace dynsyn::testing {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;

/// exp[-i pi/4 (XX + ZZ)] from the matrix exponential, with the first tensor
/// factor on qubit a (the low bit of the 4x4 index).
Matrix4 xxzz_matrix();

/// Dense matrix of a two-qubit Pauli string (phase included), same ordering.
Matrix4 pauli_matrix2(const PauliString& p);

/// Result of U P U^dagger = c Q: the Hermitian Q and c in {+1, -1}, or ok = false
/// if the image is not a signed Pauli string.
struct DenseConjugation {
  bool ok = false;
  PauliString image;
  int sign = 1;
};
DenseConjugation conjugate_dense(const Matrix4& u, const PauliString& p);

class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(size_t num_qubits);

  /// The unique state stabilized by `stabilizers` (independent, commuting, Hermitian).
  static StateVector from_stabilizers(std::span<const PauliString> stabilizers);

  size_t num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }

  void apply_two_qubit(const Matrix4& u, size_t a, size_t b);
  std::vector<Complex> pauli_applied(const PauliString& p) const;
  /// <psi|P|psi>; real for Hermitian P.
  Complex expectation(const PauliString& p) const;

  /// Probability of outcome +1 for X on `site`.
  double prob_x_plus(size_t site) const;
  /// Projects onto the X eigenvalue `outcome` (+1/-1) and renormalizes; returns the prior probability.
  double project_x(size_t site, int outcome);

  /// Von Neumann entropy of the sites in `region`, in bits.
  double entropy_bits(std::span<const uint32_t> region) const;

  double norm() const;

 private:
  size_t n_;
  std::vector<Complex> amp_;
};

}  // namespace dynsyn::testing

#endif
