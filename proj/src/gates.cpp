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

#include "spinctl/gates.hpp"

#include <algorithm>
#include <sstream>

namespace spinctl {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string with_label(int n, std::initializer_list<std::pair<int, char>> ops) {
  std::string s(n, 'E');
  for (auto [q, c] : ops) s[q - 1] = c;
  return s;
}

void check_qubits(const std::vector<int>& qs, int n_qubits, std::size_t expected,
                  const std::string& name) {
  if (qs.size() != expected)
    throw ConfigError(name + " takes " + std::to_string(expected) + " target qubit(s), got " +
                      std::to_string(qs.size()));
  for (int q : qs)
    if (q < 1 || q > n_qubits)
      throw ConfigError(name + ": qubit " + std::to_string(q) + " out of range");
  if (expected == 2 && qs[0] == qs[1])
    throw ConfigError(name + ": target qubits must be distinct");
}

std::string format_name(const std::string& family, double theta, const std::vector<int>& qs) {
  std::ostringstream os;
  os << family << "(theta=" << theta << ", q=";
  for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? "," : "") << qs[i];
  os << ")";
  return os.str();
}

}  // namespace

OperatorMatrix hermitian_exp(const OperatorMatrix& h, Complex scale) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(h);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const auto& v = eig.eigenvectors();
  Eigen::VectorXcd phases =
      (scale * eig.eigenvalues().cast<Complex>().array()).exp().matrix();
  return v * phases.asDiagonal() * v.adjoint();
}

GateTarget gate_library(const std::string& name, double theta,
                        const std::vector<int>& target_qubits, int n_qubits) {
  if (n_qubits < 1) throw ConfigError("register must have at least one qubit");

  GateTarget gate;
  gate.family = name;
  gate.theta = theta;
  gate.target_qubits = target_qubits;
  gate.name = format_name(name, theta, target_qubits);

  if (name == "Uz_single") {
    check_qubits(target_qubits, n_qubits, 1, name);
    const auto z = pauli_to_matrix({with_label(n_qubits, {{target_qubits[0], 'Z'}}), 1.0});
    gate.unitary = hermitian_exp(z, kI * (theta / 2.0));
  } else if (name == "Uz_pair") {
    check_qubits(target_qubits, n_qubits, 2, name);
    const auto zz = pauli_sum_to_matrix(
        {{with_label(n_qubits, {{target_qubits[0], 'Z'}}), 1.0},
         {with_label(n_qubits, {{target_qubits[1], 'Z'}}), 1.0}});
    gate.unitary = hermitian_exp(zz, kI * (theta / 2.0));
  } else if (name == "Uxy") {
    check_qubits(target_qubits, n_qubits, 2, name);
    const int a = target_qubits[0], b = target_qubits[1];
    const auto xy = pauli_sum_to_matrix({{with_label(n_qubits, {{a, 'X'}, {b, 'X'}}), 1.0},
                                         {with_label(n_qubits, {{a, 'Y'}, {b, 'Y'}}), 1.0}});
    gate.unitary = hermitian_exp(xy, kI * theta);
  } else {
    throw ConfigError("unknown gate '" + name + "' (expected Uz_single, Uz_pair or Uxy)");
  }
  return gate;
}

GateTarget gate_for_system(const SpinSystem& sys, const std::string& name,
                           double theta, const std::vector<int>& target_qubits) {
  for (int q : target_qubits) {
    if (std::find(sys.targets.begin(), sys.targets.end(), q) == sys.targets.end())
      throw ConfigError("gate qubit " + std::to_string(q) +
                        " is not in the system's target set");
  }
  return gate_library(name, theta, target_qubits, sys.n_qubits);
}

OperatorMatrix swap_matrix(int n_qubits, int a, int b) {
  check_qubits({a, b}, n_qubits, 2, "swap");
  const int dim = 1 << n_qubits;
  const int bit_a = n_qubits - a, bit_b = n_qubits - b;
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int va = (col >> bit_a) & 1, vb = (col >> bit_b) & 1;
    int row = col & ~((1 << bit_a) | (1 << bit_b));
    row |= (vb << bit_a) | (va << bit_b);
    m(row, col) = 1.0;
  }
  return m;
}

}  // namespace spinctl
