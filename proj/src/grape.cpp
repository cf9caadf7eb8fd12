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

#include "spinctl/grape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinctl/rng.hpp"

namespace spinctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct SparseEntry {
  int row;
  int col;
  Complex value;
};

std::vector<SparseEntry> sparsify(const OperatorMatrix& m) {
  std::vector<SparseEntry> entries;
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex{0.0, 0.0}) entries.push_back({r, c, m(r, c)});
  return entries;
}

std::vector<ControlChannel> resolve_channels(const SpinSystem& sys,
                                             const PulseSequence& pulse) {
  for (auto mode : {ControlMode::Selective, ControlMode::Collective}) {
    auto controls = build_controls(sys, mode);
    if (controls.size() != static_cast<std::size_t>(pulse.n_channels())) continue;
    bool match = true;
    for (int k = 0; k < pulse.n_channels(); ++k)
      if (controls[k].label != pulse.channels[k]) match = false;
    if (match) return controls;
  }
  throw DimensionError("pulse channels do not match the system's control channels");
}

// Per-segment eigendecompositions and cumulative propagators for one
// amplitude matrix.
struct Propagation {
  std::vector<OperatorMatrix> eigvecs;
  std::vector<Eigen::VectorXd> eigvals;
  std::vector<OperatorMatrix> segment_props;
  std::vector<OperatorMatrix> cumulative;  // cumulative[j] = U_j ... U_1
  OperatorMatrix total;
};

Propagation propagate_segments(const OperatorMatrix& drift,
                               const std::vector<ControlChannel>& controls,
                               const Eigen::MatrixXd& amplitudes_hz, double dt_s) {
  const int n_segments = static_cast<int>(amplitudes_hz.rows());
  const int dim = static_cast<int>(drift.rows());
  Propagation p;
  p.eigvecs.reserve(n_segments);
  p.eigvals.reserve(n_segments);
  p.segment_props.reserve(n_segments);
  p.cumulative.reserve(n_segments);

  OperatorMatrix h(dim, dim);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig;
  for (int j = 0; j < n_segments; ++j) {
    h = drift;
    for (std::size_t k = 0; k < controls.size(); ++k)
      h += (kPi * amplitudes_hz(j, static_cast<int>(k))) * controls[k].op;
    eig.compute(h);
    const auto& v = eig.eigenvectors();
    Eigen::VectorXcd phases =
        (-kI * dt_s * eig.eigenvalues().cast<Complex>().array()).exp().matrix();
    OperatorMatrix u = v * phases.asDiagonal() * v.adjoint();
    p.cumulative.push_back(p.cumulative.empty() ? u : OperatorMatrix(u * p.cumulative.back()));
    p.eigvecs.push_back(v);
    p.eigvals.push_back(eig.eigenvalues());
    p.segment_props.push_back(std::move(u));
  }
  p.total = p.cumulative.back();
  return p;
}

// Tr(U_t^dag U) without forming the product.
Complex target_overlap(const OperatorMatrix& u, const GateTarget& target) {
  return (target.unitary.conjugate().cwiseProduct(u)).sum();
}

double trace_fidelity(const OperatorMatrix& u, const GateTarget& target) {
  const Complex overlap = target_overlap(u, target);
  const double d = static_cast<double>(u.rows());
  if (target.phase_insensitive) return std::norm(overlap) / (d * d);
  const double re = std::max(0.0, overlap.real() / d);
  return re * re;
}

// Divided differences of the phases, (e^{-i dt a} - e^{-i dt b})/(a - b),
// in the cancellation-free form -i dt sinc(dt (a-b)/2) e^{-i dt (a+b)/2}.
Eigen::MatrixXcd phase_divided_differences(const Eigen::VectorXd& eigvals, double dt_s) {
  const int dim = static_cast<int>(eigvals.size());
  Eigen::MatrixXcd m(dim, dim);
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) {
      const double x = 0.5 * dt_s * (eigvals(p) - eigvals(q));
      const double sinc = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
      const double mid = 0.5 * (eigvals(p) + eigvals(q));
      m(p, q) = -kI * dt_s * sinc * std::exp(-kI * dt_s * mid);
    }
  }
  return m;
}

Eigen::MatrixXd gradient_from_cache(const Propagation& prop, const GateTarget& target,
                                    const std::vector<std::vector<SparseEntry>>& sparse_controls,
                                    double dt_s) {
  const int n_segments = static_cast<int>(prop.segment_props.size());
  const int n_channels = static_cast<int>(sparse_controls.size());
  const int dim = static_cast<int>(prop.total.rows());
  const double d = static_cast<double>(dim);

  const Complex overlap = target_overlap(prop.total, target);
  // dF/du = (2/d^2) Re(conj(G) dG/du) for F = |G|^2/d^2,
  //         (2/d^2) Re(G) Re(dG/du)   for the phase-sensitive variant.
  Eigen::MatrixXd grad(n_segments, n_channels);
  OperatorMatrix backward = OperatorMatrix::Identity(dim, dim);  // U_N ... U_{j+1}
  const OperatorMatrix target_adj = target.unitary.adjoint();

  for (int j = n_segments - 1; j >= 0; --j) {
    // dG/du_jk = Tr(P_j dU_j) with P_j = X_{j-1} U_t^dag Lambda_j.
    OperatorMatrix p = target_adj * backward;
    if (j > 0) p = prop.cumulative[j - 1] * p;
    const auto& v = prop.eigvecs[j];
    const Eigen::MatrixXcd m = phase_divided_differences(prop.eigvals[j], dt_s);
    // Tr(P V (M . W) V^dag) over channels, W = V^dag (pi H_k) V: contract the
    // sparse H_k against S = conj(V) (Q^T . M) V^T with Q = V^dag P V.
    const OperatorMatrix q = v.adjoint() * p * v;
    const OperatorMatrix t = q.transpose().cwiseProduct(m);
    const OperatorMatrix s = v.conjugate() * t * v.transpose();
    for (int k = 0; k < n_channels; ++k) {
      Complex dg{0.0, 0.0};
      for (const auto& e : sparse_controls[k]) dg += e.value * s(e.row, e.col);
      dg *= kPi;
      if (target.phase_insensitive)
        grad(j, k) = 2.0 * (std::conj(overlap) * dg).real() / (d * d);
      else
        grad(j, k) = 2.0 * std::max(0.0, overlap.real() / d) * dg.real() / d;
    }
    backward = backward * prop.segment_props[j];
  }
  return grad;
}

void clamp_amplitudes(Eigen::MatrixXd& amplitudes, double max_rf_hz) {
  amplitudes = amplitudes.cwiseMax(-max_rf_hz).cwiseMin(max_rf_hz);
}

}  // namespace

OperatorMatrix propagate(const OperatorMatrix& drift,
                         const std::vector<ControlChannel>& controls,
                         const PulseSequence& pulse) {
  pulse.validate();
  if (controls.size() != static_cast<std::size_t>(pulse.n_channels()))
    throw DimensionError("pulse channel count does not match the control list");
  for (const auto& c : controls)
    if (c.op.rows() != drift.rows() || c.op.cols() != drift.cols())
      throw DimensionError("control and drift dimensions differ");
  return propagate_segments(drift, controls, pulse.amplitudes_hz, pulse.dt_s).total;
}

OperatorMatrix propagate(const SpinSystem& sys, const PulseSequence& pulse) {
  return propagate(build_drift(sys), resolve_channels(sys, pulse), pulse);
}

DeviationState propagate_state(const SpinSystem& sys, const PulseSequence& pulse,
                               const DeviationState& state,
                               const std::vector<double>& t2_s) {
  pulse.validate();
  const auto controls = resolve_channels(sys, pulse);
  const auto prop =
      propagate_segments(build_drift(sys), controls, pulse.amplitudes_hz, pulse.dt_s);
  if (t2_s.empty()) return apply_gate(state, prop.total);

  const Eigen::MatrixXd damping = dephasing_damping(sys.n_qubits, t2_s, pulse.dt_s);
  OperatorMatrix rho = state.matrix;
  for (const auto& u : prop.segment_props) {
    rho = u * rho * u.adjoint();
    rho = rho.cwiseProduct(damping.cast<Complex>());
  }
  return {std::move(rho), state.label};
}

double fidelity(const OperatorMatrix& u, const GateTarget& target) {
  if (u.rows() != target.unitary.rows() || u.cols() != target.unitary.cols())
    throw DimensionError("gate and target dimensions differ");
  return trace_fidelity(u, target);
}

Eigen::MatrixXd grape_gradient(const OperatorMatrix& drift,
                               const std::vector<ControlChannel>& controls,
                               const GateTarget& target, const PulseSequence& pulse) {
  pulse.validate();
  std::vector<std::vector<SparseEntry>> sparse;
  for (const auto& c : controls) sparse.push_back(sparsify(c.op));
  const auto prop = propagate_segments(drift, controls, pulse.amplitudes_hz, pulse.dt_s);
  return gradient_from_cache(prop, target, sparse, pulse.dt_s);
}

Eigen::MatrixXd grape_gradient(const SpinSystem& sys, const GateTarget& target,
                               const PulseSequence& pulse) {
  return grape_gradient(build_drift(sys), resolve_channels(sys, pulse), target, pulse);
}

GrapeResult grape_optimize(const OperatorMatrix& drift,
                           const std::vector<ControlChannel>& controls,
                           const GateTarget& target, const GrapeConfig& cfg) {
  if (cfg.n_segments < 1) throw ConfigError("n_segments must be positive");
  if (!(cfg.dt_s > 0.0)) throw ConfigError("dt_s must be positive");
  if (cfg.max_rf_hz <= 0.0) throw ConfigError("max_rf_hz must be positive");
  if (cfg.restarts < 1) throw ConfigError("restarts must be positive");
  if (controls.empty()) throw ConfigError("no control channels");
  const auto dim = drift.rows();
  if (target.unitary.rows() != dim)
    throw DimensionError("target unitary does not match the register");
  const double unitarity =
      (target.unitary.adjoint() * target.unitary - OperatorMatrix::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity > 1e-10) throw ConfigError("target is not unitary");

  std::vector<std::vector<SparseEntry>> sparse;
  for (const auto& c : controls) sparse.push_back(sparsify(c.op));
  const int n_channels = static_cast<int>(controls.size());
  const double init_amp =
      cfg.init_amp_hz > 0.0 ? cfg.init_amp_hz : cfg.max_rf_hz / 50.0;

  GrapeResult best;
  best.achieved_fidelity = -1.0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(restart);
    Rng rng(seed);
    Eigen::MatrixXd u(cfg.n_segments, n_channels);
    for (int j = 0; j < cfg.n_segments; ++j)
      for (int k = 0; k < n_channels; ++k) u(j, k) = rng.uniform(-init_amp, init_amp);

    Propagation prop = propagate_segments(drift, controls, u, cfg.dt_s);
    double f = trace_fidelity(prop.total, target);
    std::vector<TracePoint> trace{{0, f, 0.0}};

    double step = 0.0;  // set from the first gradient
    for (int iter = 1; iter <= cfg.max_iters && f < cfg.fidelity_goal; ++iter) {
      const Eigen::MatrixXd grad = gradient_from_cache(prop, target, sparse, cfg.dt_s);
      const double gmax = grad.cwiseAbs().maxCoeff();
      if (!(gmax > 0.0)) break;

      if (!cfg.line_search) {
        const double alpha = cfg.fixed_step > 0.0 ? cfg.fixed_step : 0.02 * cfg.max_rf_hz / gmax;
        u += alpha * grad;
        clamp_amplitudes(u, cfg.max_rf_hz);
        prop = propagate_segments(drift, controls, u, cfg.dt_s);
        f = trace_fidelity(prop.total, target);
        trace.push_back({iter, f, alpha});
        continue;
      }

      if (step <= 0.0) step = 0.05 * cfg.max_rf_hz / gmax;
      bool accepted = false;
      double alpha = step;
      for (int halvings = 0; halvings < 40; ++halvings) {
        Eigen::MatrixXd u_trial = u + alpha * grad;
        clamp_amplitudes(u_trial, cfg.max_rf_hz);
        Propagation trial = propagate_segments(drift, controls, u_trial, cfg.dt_s);
        const double f_trial = trace_fidelity(trial.total, target);
        if (f_trial > f) {
          u = std::move(u_trial);
          prop = std::move(trial);
          f = f_trial;
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) break;  // stationary within line-search resolution
      trace.push_back({iter, f, alpha});
      step = alpha * 2.0;
    }

    best.restart_fidelities.push_back(f);
    if (f > best.achieved_fidelity) {
      best.achieved_fidelity = f;
      best.pulse.dt_s = cfg.dt_s;
      best.pulse.amplitudes_hz = u;
      best.pulse.channels.clear();
      for (const auto& c : controls) best.pulse.channels.push_back(c.label);
      best.trace = std::move(trace);
      best.winning_restart = restart;
      best.winning_seed = seed;
    }
    if (best.achieved_fidelity >= cfg.fidelity_goal) break;
  }

  best.reached_goal = best.achieved_fidelity >= cfg.fidelity_goal;
  return best;
}

GrapeResult grape_optimize(const SpinSystem& sys, const GateTarget& target,
                           const GrapeConfig& cfg) {
  return grape_optimize(build_drift(sys), build_controls(sys, cfg.mode), target, cfg);
}

double perturbed_fidelity(const SpinSystem& sys, const PulseSequence& pulse,
                          const GateTarget& target, const Perturbation& perturbation) {
  switch (perturbation.kind) {
    case Perturbation::Kind::None:
      return fidelity(propagate(sys, pulse), target);
    case Perturbation::Kind::AmplitudeScale: {
      PulseSequence scaled = pulse;
      scaled.amplitudes_hz *= (1.0 + perturbation.epsilon);
      return fidelity(propagate(sys, scaled), target);
    }
    case Perturbation::Kind::Dephasing: {
      const StateBasis basis = family_state_basis(sys, '0');
      double acc = 0.0;
      for (const auto& b : basis.states) {
        const DeviationState ideal = apply_gate(b, target.unitary);
        const DeviationState actual = propagate_state(sys, pulse, b, perturbation.t2_s);
        acc += (ideal.matrix.adjoint() * actual.matrix).trace().real() /
               ideal.matrix.squaredNorm();
      }
      return acc / static_cast<double>(basis.states.size());
    }
  }
  throw ConfigError("unknown perturbation kind");
}

}  // namespace spinctl
