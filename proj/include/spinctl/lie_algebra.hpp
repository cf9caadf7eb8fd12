// Copyright 2026 The Spinctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "spinctl/pauli.hpp"

namespace spinctl {

/// Orthonormal basis (Hilbert-Schmidt inner product) of a matrix Lie algebra
/// of skew-Hermitian operators. Produced by closure(); read-only afterwards.
class AlgebraBasis {
 public:
  AlgebraBasis(int n_qubits, double tol);

  int dim() const { return static_cast<int>(elements_.size()); }
  int n_qubits() const { return n_qubits_; }
  double tol() const { return tol_; }
  const std::vector<OperatorMatrix>& elements() const { return elements_; }

  /// Real coefficient vector over the i*Pauli basis, scaled so its Euclidean
  /// norm equals the Frobenius norm of the (skew-Hermitian) input. Gram-
  /// Schmidt runs in this space, which keeps every element exactly traceless
  /// and i-times-real by construction.
  Eigen::VectorXd pauli_flatten(const OperatorMatrix& skew) const;
  OperatorMatrix pauli_unflatten(const Eigen::VectorXd& w) const;

  /// Norm of w's component orthogonal to the span. Mutates w into that
  /// residual. A second projection pass refines candidates that survive the
  /// first.
  double project_out(Eigen::VectorXd& w, int passes = 2) const;

  /// Append a unit-norm element (residual direction); internal use and tests.
  void append(const OperatorMatrix& element, const Eigen::VectorXd& flat);

 private:
  int n_qubits_;
  double tol_;
  std::vector<OperatorMatrix> elements_;
  Eigen::MatrixXd flat_;  // row i = Pauli coefficients of elements_[i]
  int rows_used_ = 0;
};

/// Smallest matrix Lie algebra containing the generators, as an orthonormal
/// basis. Hermitian generators are accepted and multiplied by i; inputs that
/// are neither Hermitian nor skew-Hermitian are rejected. The tolerance is
/// relative: a candidate direction is kept when the sine of its angle to the
/// current span exceeds tol. Deterministic breadth-first commutator sweep.
AlgebraBasis closure(const std::vector<OperatorMatrix>& generators, double tol = 1e-8);

struct MembershipResult {
  bool in_algebra = false;
  double residual = 0.0;  // norm of out-of-span component, relative to ||op||
};

/// Distance of op (Hermitian or skew-Hermitian) from span(basis).
MembershipResult membership(const OperatorMatrix& op, const AlgebraBasis& basis);

/// True when every traceless Pauli string supported only on `qubits`
/// (identity elsewhere) lies in the algebra.
bool subsystem_full_control(const AlgebraBasis& basis, const std::vector<int>& qubits);

/// Pauli decomposition of each basis element divided by i (real coefficients;
/// elements are i times real Pauli combinations). Terms sorted by descending
/// magnitude, ties by label.
std::vector<std::vector<PauliString>> label_basis(const AlgebraBasis& basis,
                                                  double cutoff = 1e-10);

}  // namespace spinctl
