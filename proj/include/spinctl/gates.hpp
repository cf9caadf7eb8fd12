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

#include "spinctl/pauli.hpp"
#include "spinctl/spin_system.hpp"

namespace spinctl {

/// A unitary gate on the full register, acting nontrivially only on its
/// target qubits (identity elsewhere). Gate synthesis treats it as defined up
/// to a global phase unless phase_insensitive is cleared.
struct GateTarget {
  std::string name;     // e.g. "Uz_single(theta=-1.5708, q=3)"
  std::string family;   // "Uz_single" | "Uz_pair" | "Uxy"
  double theta = 0.0;
  std::vector<int> target_qubits;
  OperatorMatrix unitary;
  bool phase_insensitive = true;
};

/// exp(scale * H) for Hermitian H via eigendecomposition.
OperatorMatrix hermitian_exp(const OperatorMatrix& h, Complex scale);

/// Library gates on an n-qubit register:
///   Uz_single: exp(i theta Z_q / 2), one target qubit
///   Uz_pair:   exp(i theta (Z_a + Z_b) / 2), theta conventionally -pi
///   Uxy:       exp(i theta (X_a X_b + Y_a Y_b)), two target qubits
/// Throws ConfigError for unknown names or a target count that does not fit.
GateTarget gate_library(const std::string& name, double theta,
                        const std::vector<int>& target_qubits, int n_qubits);

/// Same, validating that the requested qubits lie in the system's target set.
GateTarget gate_for_system(const SpinSystem& sys, const std::string& name,
                           double theta, const std::vector<int>& target_qubits);

/// SWAP between qubits a and b, identity elsewhere.
OperatorMatrix swap_matrix(int n_qubits, int a, int b);

}  // namespace spinctl
