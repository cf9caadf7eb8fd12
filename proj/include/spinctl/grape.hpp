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

#include <cstdint>
#include <string>
#include <vector>

#include "spinctl/dynamics.hpp"
#include "spinctl/gates.hpp"
#include "spinctl/pulse.hpp"
#include "spinctl/spin_system.hpp"

namespace spinctl {

/// Total propagator of drift + pulse: product over segments of
/// exp(-i (H_drift + sum_k pi u_jk H_k) dt), last segment leftmost. Exact
/// per-segment exponentials via eigendecomposition.
OperatorMatrix propagate(const OperatorMatrix& drift,
                         const std::vector<ControlChannel>& controls,
                         const PulseSequence& pulse);

/// Convenience overload; channels are resolved against the pulse's labels.
OperatorMatrix propagate(const SpinSystem& sys, const PulseSequence& pulse);

/// Pulse applied to a deviation state; when t2_s is nonempty the per-qubit
/// dephasing channel is interleaved with every segment.
DeviationState propagate_state(const SpinSystem& sys, const PulseSequence& pulse,
                               const DeviationState& state,
                               const std::vector<double>& t2_s = {});

/// Gate fidelity in [0, 1]. Phase-insensitive targets use
/// |Tr(U_t^dag U)|^2 / d^2; otherwise the real part of the normalized trace
/// (clamped at zero) is squared, so a global phase costs fidelity.
double fidelity(const OperatorMatrix& u, const GateTarget& target);

struct GrapeConfig {
  int n_segments = 200;
  double dt_s = 25e-6;
  double max_rf_hz = 10000.0;
  int max_iters = 2000;
  double fidelity_goal = 0.999;
  std::uint64_t seed = 1;
  int restarts = 5;
  double init_amp_hz = 0.0;  // 0: use max_rf_hz / 50
  bool line_search = true;   // false: fixed-step ascent
  double fixed_step = 0.0;   // only used when line_search is false
  ControlMode mode = ControlMode::Selective;
};

struct TracePoint {
  int iteration;
  double fidelity;
  double step_size;
};

struct GrapeResult {
  PulseSequence pulse;
  double achieved_fidelity = 0.0;
  std::vector<TracePoint> trace;  // winning restart only
  int winning_restart = -1;
  std::uint64_t winning_seed = 0;
  bool reached_goal = false;
  std::vector<double> restart_fidelities;
};

/// Gradient-ascent pulse synthesis for the target gate. Gradients are exact
/// per-segment derivatives of the matrix exponential (eigendecomposition
/// route), amplitudes are clamped to max_rf_hz, and the per-iteration trace
/// is monotone non-decreasing while the line search is on. Restarts run from
/// seeds seed, seed+1, ...; the first restart reaching fidelity_goal wins,
/// otherwise the best one.
GrapeResult grape_optimize(const SpinSystem& sys, const GateTarget& target,
                           const GrapeConfig& cfg);

/// Same on an explicit drift + control set (e.g. a register without an
/// actuator/target partition). cfg.mode is ignored.
GrapeResult grape_optimize(const OperatorMatrix& drift,
                           const std::vector<ControlChannel>& controls,
                           const GateTarget& target, const GrapeConfig& cfg);

/// Objective gradient at the given pulse, for verification against finite
/// differences. Layout matches amplitudes_hz.
Eigen::MatrixXd grape_gradient(const SpinSystem& sys, const GateTarget& target,
                               const PulseSequence& pulse);
Eigen::MatrixXd grape_gradient(const OperatorMatrix& drift,
                               const std::vector<ControlChannel>& controls,
                               const GateTarget& target, const PulseSequence& pulse);

struct Perturbation {
  enum class Kind { None, AmplitudeScale, Dephasing };
  Kind kind = Kind::None;
  double epsilon = 0.0;       // AmplitudeScale: amplitudes scaled by (1 + eps)
  std::vector<double> t2_s;   // Dephasing: per-qubit T2

  static Perturbation none() { return {}; }
  static Perturbation amplitude_scale(double eps) {
    return {Kind::AmplitudeScale, eps, {}};
  }
  static Perturbation dephasing(std::vector<double> t2_s) {
    return {Kind::Dephasing, 0.0, std::move(t2_s)};
  }
};

/// Gate performance under a perturbation. None and AmplitudeScale return the
/// unitary gate fidelity of the (possibly rescaled) pulse. Dephasing returns
/// the mean overlap of the dephased pulse output with the ideal gate output
/// over the family state basis (a state-level figure, 1 when T2 -> inf and
/// the pulse is exact).
double perturbed_fidelity(const SpinSystem& sys, const PulseSequence& pulse,
                          const GateTarget& target, const Perturbation& perturbation);

}  // namespace spinctl
