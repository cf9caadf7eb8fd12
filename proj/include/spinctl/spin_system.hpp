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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinctl/pauli.hpp"

namespace spinctl {

/// A spin-1/2 register with chemical shifts, dipolar and scalar couplings,
/// partitioned into directly driven actuator qubits and indirectly driven
/// target qubits. Qubit indices are 1-based throughout.
///
/// Immutable after construction; all operations on it are pure functions.
struct SpinSystem {
  int n_qubits = 0;
  std::vector<std::string> species;  // per qubit, e.g. "H", "F"
  std::vector<double> shifts_hz;     // chemical shift of each qubit
  Eigen::MatrixXd dipolar_hz;        // symmetric, zero diagonal
  Eigen::MatrixXd scalar_hz;         // symmetric, zero diagonal
  std::vector<int> actuators;        // sorted, 1-based
  std::vector<int> targets;          // complement of actuators, sorted
  std::string name;

  int dim() const { return 1 << n_qubits; }
  bool is_actuator(int qubit) const;
  double shift(int qubit) const { return shifts_hz[qubit - 1]; }
  double dipolar(int i, int j) const { return dipolar_hz(i - 1, j - 1); }
  double scalar(int i, int j) const { return scalar_hz(i - 1, j - 1); }
  bool same_species(int i, int j) const { return species[i - 1] == species[j - 1]; }

  /// Throws ConfigError on any violated invariant (partition, symmetry,
  /// diagonal, sizes).
  void validate() const;

  /// Distinct species labels in qubit order of first appearance.
  std::vector<std::string> species_list() const;

  /// Parse from the molecule-configuration JSON text (comments allowed).
  static SpinSystem from_config_text(const std::string& text);
  static SpinSystem from_config_file(const std::string& path);
};

/// Static Hamiltonian in rad/s: -pi sum_i nu_i Z_i plus, per pair,
/// pi D Z_iZ_j (different species) or (pi D / 2)(2 Z_iZ_j - X_iX_j - Y_iY_j)
/// (same species), and scalar terms (pi J / 2) Z_iZ_j across species or
/// (pi J / 2)(X_iX_j + Y_iY_j + Z_iZ_j) within one. Hermitian and traceless.
OperatorMatrix build_drift(const SpinSystem& sys);

/// Same content as build_drift, as labeled Pauli strings.
std::vector<PauliString> drift_terms(const SpinSystem& sys);

enum class ControlMode { Selective, Collective };

struct ControlChannel {
  std::string label;  // "X3" (selective) or "X(H)" (collective)
  OperatorMatrix op;  // unit-coefficient Hermitian generator
};

/// Control-field generators on the actuator qubits. Selective mode yields an
/// (X_k, Y_k) pair per actuator; collective mode one pair per actuator
/// species, summed over its qubits. Pulse amplitudes multiply these by
/// pi * amplitude_hz later.
std::vector<ControlChannel> build_controls(const SpinSystem& sys,
                                           ControlMode mode = ControlMode::Selective);

/// Human-readable warnings about parameter degeneracies (equal shifts within
/// a species, repeated coupling values) that can shrink the dynamical Lie
/// algebra below its generic dimension.
std::vector<std::string> degeneracy_warnings(const SpinSystem& sys, double rel_tol = 1e-9);

}  // namespace spinctl
