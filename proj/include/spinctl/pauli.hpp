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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinctl/errors.hpp"

namespace spinctl {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

/// Labeled tensor product of single-qubit operators {E, X, Y, Z} with a real
/// coefficient. Qubit 1 is the leftmost label (first Kronecker factor).
struct PauliString {
  std::string labels;
  double coefficient = 1.0;

  PauliString() = default;
  PauliString(std::string labels, double coefficient = 1.0)
      : labels(std::move(labels)), coefficient(coefficient) {}

  int n_qubits() const { return static_cast<int>(labels.size()); }
  bool is_identity() const;  // all-E string (the only one with nonzero trace)
};

/// True for 'E', 'X', 'Y', 'Z'.
bool is_pauli_label(char c);

/// 2x2 matrix for a single label.
Eigen::Matrix2cd single_qubit_matrix(char label);

/// Kronecker product over the labels, scaled by the coefficient.
OperatorMatrix pauli_to_matrix(const PauliString& p);

/// Sum of pauli_to_matrix over the terms; all terms must share one register
/// size.
OperatorMatrix pauli_sum_to_matrix(const std::vector<PauliString>& terms);

/// Expand a Hermitian matrix in the Pauli-string basis: c_p = Tr(P m) / 2^n.
/// Terms with |c_p| <= cutoff are dropped, the rest are returned in
/// lexicographic label order (E < X < Y < Z per position). Throws
/// DimensionError for non-power-of-two sizes and ConfigError when the
/// coefficients have an imaginary part above the cutoff (the matrix is then
/// not a real Pauli combination; decompose its Hermitian parts separately).
std::vector<PauliString> matrix_to_pauli(const OperatorMatrix& m,
                                         double cutoff = 1e-10);

/// Single decomposition coefficient Tr(P† m) / 2^n for one label string.
Complex pauli_component(const OperatorMatrix& m, const std::string& labels);

/// Number of qubits for a 2^n-dimensional matrix; throws DimensionError if
/// the matrix is not square with power-of-two size.
int qubit_count(const OperatorMatrix& m);

}  // namespace spinctl
