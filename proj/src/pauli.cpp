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

#include "spinctl/pauli.hpp"

#include <cmath>

namespace spinctl {

namespace {

constexpr Complex kI{0.0, 1.0};

// Bit of qubit q (1-based, leftmost Kronecker factor) in basis index idx.
inline int qubit_bit(int idx, int q, int n) { return (idx >> (n - q)) & 1; }

// Column -> (row, entry) structure of a Pauli string: each column b has a
// single nonzero row b ^ xmask with value phase(b).
struct SparsePauli {
  int xmask = 0;  // bits flipped by X/Y factors, qubit 1 = highest bit
  int n = 0;

  explicit SparsePauli(const std::string& labels) {
    n = static_cast<int>(labels.size());
    for (int q = 1; q <= n; ++q) {
      char c = labels[q - 1];
      if (c == 'X' || c == 'Y') xmask |= 1 << (n - q);
    }
  }

  Complex phase(const std::string& labels, int col) const {
    Complex ph{1.0, 0.0};
    for (int q = 1; q <= n; ++q) {
      int b = qubit_bit(col, q, n);
      switch (labels[q - 1]) {
        case 'E':
        case 'X':
          break;
        case 'Y':
          ph *= b ? -kI : kI;
          break;
        case 'Z':
          if (b) ph = -ph;
          break;
        default:
          throw ParseError(std::string("unknown Pauli label '") + labels[q - 1] + "'",
                           static_cast<std::size_t>(q - 1));
      }
    }
    return ph;
  }
};

}  // namespace

bool PauliString::is_identity() const {
  return labels.find_first_not_of('E') == std::string::npos;
}

bool is_pauli_label(char c) { return c == 'E' || c == 'X' || c == 'Y' || c == 'Z'; }

Eigen::Matrix2cd single_qubit_matrix(char label) {
  Eigen::Matrix2cd m;
  switch (label) {
    case 'E': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default:
      throw ParseError(std::string("unknown Pauli label '") + label + "'");
  }
  return m;
}

OperatorMatrix pauli_to_matrix(const PauliString& p) {
  const int n = p.n_qubits();
  if (n == 0) throw DimensionError("empty Pauli string");
  for (char c : p.labels) {
    if (!is_pauli_label(c))
      throw ParseError(std::string("unknown Pauli label '") + c + "'",
                       p.labels.find(c));
  }
  const int dim = 1 << n;
  SparsePauli sp(p.labels);
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    m(col ^ sp.xmask, col) = p.coefficient * sp.phase(p.labels, col);
  }
  return m;
}

OperatorMatrix pauli_sum_to_matrix(const std::vector<PauliString>& terms) {
  if (terms.empty()) throw DimensionError("empty Pauli-string sum");
  const int n = terms.front().n_qubits();
  const int dim = 1 << n;
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (const auto& t : terms) {
    if (t.n_qubits() != n)
      throw DimensionError("Pauli-string sum mixes register sizes");
    m += pauli_to_matrix(t);
  }
  return m;
}

int qubit_count(const OperatorMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix is not square");
  const auto dim = m.rows();
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw DimensionError("matrix dimension is not a power of two");
  int n = 0;
  for (auto d = dim; d > 1; d >>= 1) ++n;
  return n;
}

Complex pauli_component(const OperatorMatrix& m, const std::string& labels) {
  const int n = qubit_count(m);
  if (static_cast<int>(labels.size()) != n)
    throw DimensionError("label length does not match matrix size");
  const int dim = 1 << n;
  SparsePauli sp(labels);
  Complex acc{0.0, 0.0};
  for (int col = 0; col < dim; ++col) {
    // Tr(P† m) = sum_col conj(P(row, col)) m(row, col), row = col ^ xmask.
    acc += std::conj(sp.phase(labels, col)) * m(col ^ sp.xmask, col);
  }
  return acc / static_cast<double>(dim);
}

std::vector<PauliString> matrix_to_pauli(const OperatorMatrix& m, double cutoff) {
  const int n = qubit_count(m);
  static const char kLabels[4] = {'E', 'X', 'Y', 'Z'};
  std::vector<PauliString> out;
  std::string labels(n, 'E');
  const long total = 1L << (2 * n);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int q = n - 1; q >= 0; --q) {
      labels[q] = kLabels[c & 3];
      c >>= 2;
    }
    const Complex comp = pauli_component(m, labels);
    if (std::abs(comp) <= cutoff) continue;
    if (std::abs(comp.imag()) > cutoff)
      throw ConfigError("matrix has a non-real Pauli coefficient at " + labels +
                        "; not a real Pauli-string combination");
    out.emplace_back(labels, comp.real());
  }
  return out;
}

}  // namespace spinctl
