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

#include <functional>
#include <string>
#include <vector>

#include "spinctl/gates.hpp"
#include "spinctl/pauli.hpp"
#include "spinctl/spin_system.hpp"

namespace spinctl {

/// Traceless Hermitian deviation density matrix with its product-operator
/// expression when known.
struct DeviationState {
  OperatorMatrix matrix;
  std::string label;
};

/// Parse a +/- signed sum of product-operator strings over {E,X,Y,Z,0,1},
/// e.g. "EYE+EEY", "10X", "-1Y0". 0 and 1 are the computational projectors
/// (E+Z)/2 and (E-Z)/2. The traceless part of the sum is returned.
DeviationState parse_state(const std::string& expr, int n_qubits);

/// U rho U^dag.
DeviationState apply_gate(const DeviationState& state, const OperatorMatrix& u);

/// Named deviation states forming the closed set for a gate family.
struct StateBasis {
  std::vector<DeviationState> states;
};

/// c_i = Tr(B_i rho) / Tr(B_i B_i).
std::vector<double> overlap_coeffs(const DeviationState& state, const StateBasis& basis);

/// The four-state family basis on the system's target pair (a, b):
/// {pXb, pYb, pXa, pYa} patterns with X/Y on one target, projector 0 on the
/// other, and every actuator fixed to `actuator_fill` ('0' or '1').
/// For a 3-qubit register with fill '1' this is {1 0X, 1 0Y, 1 X0, 1 Y0}.
StateBasis family_state_basis(const SpinSystem& sys, char actuator_fill = '0');

/// Elementwise transverse-decay factors: entry (i, j) is the product of
/// exp(-duration / T2_q) over qubits whose basis bit differs between i and j.
/// Multiplying a density matrix elementwise by this damps every Pauli string
/// with X or Y at those qubits and leaves E/Z factors alone.
Eigen::MatrixXd dephasing_damping(int n_qubits, const std::vector<double>& t2_s,
                                  double duration_s);

/// Per-qubit transverse dephasing channel for the given duration.
DeviationState apply_dephasing(const DeviationState& state, const SpinSystem& sys,
                               const std::vector<double>& t2_s, double duration_s);

/// Predicted stay/transfer pair for an XY-gate input: the input pattern must
/// be one transverse operator (X or Y) on one qubit of the pair and the 0
/// projector on the other. Signs are arranged so that the exact gate gives
/// stay = cos(2 theta) and transfer = sin(2 theta).
struct TransferPair {
  std::string stay;
  std::string transfer;
};
TransferPair xy_transfer_pair(const std::string& input_expr, int a, int b);

struct SweepOptions {
  /// Gate realization per angle; empty means the exact XY gate on (a, b).
  std::function<OperatorMatrix(double)> realize;
  /// When nonempty, the dephasing channel for `duration_s` is applied after
  /// the gate at every angle.
  std::vector<double> t2_s;
  double duration_s = 0.0;
};

struct SweepPoint {
  double theta;
  double stay;
  double transfer;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::string stay_label;
  std::string transfer_label;
  double amp_stay = 0.0;       // least-squares A in stay ~ A cos(2 theta)
  double amp_transfer = 0.0;   // least-squares B in transfer ~ B sin(2 theta)
  double residual_stay = 0.0;  // rms misfit
  double residual_transfer = 0.0;
};

/// Apply the XY gate on target pair (a, b) across the angle grid, project the
/// output on the predicted stay/transfer states, and fit A cos(2 theta) /
/// B sin(2 theta). Needs at least two angles.
SweepResult theta_sweep(const SpinSystem& sys, int a, int b, const std::string& input_expr,
                        const std::vector<double>& theta_grid,
                        const SweepOptions& options = {});

/// Phase-forgiving agreement between evolution under
/// pi(-nu_a Z_a - nu_b Z_b + D_ab Z_a Z_b) for time tau and the coupling-free
/// evolution under pi(-nu_a Z_a - nu_b Z_b); equals 1 when tau * D_ab is an
/// integer. (a, b) is the system's target pair.
double commensurate_fidelity(const SpinSystem& sys, double tau_s);

/// commensurate_fidelity at tau = m / D_ab, checked against 1 - 1e-9.
bool commensurate_check(const SpinSystem& sys, int m);

}  // namespace spinctl
