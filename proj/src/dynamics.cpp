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

#include "spinctl/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace spinctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd projector_or_pauli(char c) {
  switch (c) {
    case '0': return (single_qubit_matrix('E') + single_qubit_matrix('Z')) / 2.0;
    case '1': return (single_qubit_matrix('E') - single_qubit_matrix('Z')) / 2.0;
    default: return single_qubit_matrix(c);
  }
}

bool is_state_symbol(char c) {
  return is_pauli_label(c) || c == '0' || c == '1';
}

}  // namespace

DeviationState parse_state(const std::string& expr, int n_qubits) {
  if (n_qubits < 1) throw ConfigError("register must have at least one qubit");
  const int dim = 1 << n_qubits;
  OperatorMatrix sum = OperatorMatrix::Zero(dim, dim);

  std::size_t pos = 0;
  bool any_term = false;
  while (pos < expr.size()) {
    double sign = 1.0;
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = (expr[pos] == '-') ? -1.0 : 1.0;
      ++pos;
    } else if (any_term) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    if (pos + n_qubits > expr.size())
      throw ParseError("term shorter than the register size", pos);
    const std::string term = expr.substr(pos, n_qubits);
    for (std::size_t k = 0; k < term.size(); ++k) {
      if (!is_state_symbol(term[k]))
        throw ParseError(std::string("unknown symbol '") + term[k] + "'", pos + k);
    }

    OperatorMatrix m = OperatorMatrix::Identity(1, 1);
    for (char c : term) {
      const Eigen::Matrix2cd f = projector_or_pauli(c);
      OperatorMatrix next(m.rows() * 2, m.cols() * 2);
      next.topLeftCorner(m.rows(), m.cols()) = f(0, 0) * m;
      next.topRightCorner(m.rows(), m.cols()) = f(0, 1) * m;
      next.bottomLeftCorner(m.rows(), m.cols()) = f(1, 0) * m;
      next.bottomRightCorner(m.rows(), m.cols()) = f(1, 1) * m;
      m = std::move(next);
    }
    sum += sign * m;
    pos += n_qubits;
    any_term = true;
  }
  if (!any_term) throw ParseError("empty state expression");

  const Complex tr = sum.trace();
  sum -= (tr / static_cast<double>(dim)) * OperatorMatrix::Identity(dim, dim);
  return {std::move(sum), expr};
}

DeviationState apply_gate(const DeviationState& state, const OperatorMatrix& u) {
  if (u.rows() != state.matrix.rows() || u.cols() != state.matrix.cols())
    throw DimensionError("gate and state dimensions differ");
  return {u * state.matrix * u.adjoint(), state.label};
}

std::vector<double> overlap_coeffs(const DeviationState& state, const StateBasis& basis) {
  std::vector<double> coeffs;
  coeffs.reserve(basis.states.size());
  for (const auto& b : basis.states) {
    if (b.matrix.rows() != state.matrix.rows())
      throw DimensionError("basis state dimension differs from the state");
    const double norm2 = b.matrix.squaredNorm();
    if (norm2 <= 0.0) throw ConfigError("zero-norm basis state '" + b.label + "'");
    coeffs.push_back((b.matrix.adjoint() * state.matrix).trace().real() / norm2);
  }
  return coeffs;
}

StateBasis family_state_basis(const SpinSystem& sys, char actuator_fill) {
  if (actuator_fill != '0' && actuator_fill != '1')
    throw ConfigError("actuator fill must be '0' or '1'");
  if (sys.targets.size() != 2)
    throw ConfigError("family basis requires exactly two target qubits");
  const int a = sys.targets[0], b = sys.targets[1];

  const auto make = [&](int x_on, char op) {
    std::string s(sys.n_qubits, actuator_fill);
    for (int t : sys.targets) s[t - 1] = '0';
    s[x_on - 1] = op;
    return parse_state(s, sys.n_qubits);
  };
  // Order: transverse on the second target first, mirroring {**0X, **0Y,
  // **X0, **Y0}.
  return {{make(b, 'X'), make(b, 'Y'), make(a, 'X'), make(a, 'Y')}};
}

Eigen::MatrixXd dephasing_damping(int n_qubits, const std::vector<double>& t2_s,
                                  double duration_s) {
  if (static_cast<int>(t2_s.size()) != n_qubits)
    throw ConfigError("need one T2 per qubit");
  if (duration_s < 0.0) throw ConfigError("dephasing duration must be nonnegative");
  std::vector<double> decay(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    if (!(t2_s[q] > 0.0)) throw ConfigError("T2 must be positive");
    decay[q] = std::exp(-duration_s / t2_s[q]);
  }
  const int dim = 1 << n_qubits;
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double f = 1.0;
      int diff = i ^ j;
      for (int q = 0; q < n_qubits; ++q)
        if ((diff >> (n_qubits - 1 - q)) & 1) f *= decay[q];
      g(i, j) = f;
    }
  }
  return g;
}

DeviationState apply_dephasing(const DeviationState& state, const SpinSystem& sys,
                               const std::vector<double>& t2_s, double duration_s) {
  const auto damping = dephasing_damping(sys.n_qubits, t2_s, duration_s);
  if (state.matrix.rows() != damping.rows())
    throw DimensionError("state dimension does not match the register");
  return {state.matrix.cwiseProduct(damping.cast<Complex>()), state.label};
}

TransferPair xy_transfer_pair(const std::string& input_expr, int a, int b) {
  std::string body = input_expr;
  double sign = 1.0;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    sign = (body[0] == '-') ? -1.0 : 1.0;
    body = body.substr(1);
  }
  const int n = static_cast<int>(body.size());
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw ConfigError("target pair out of range for the input pattern");
  const char ca = body[a - 1], cb = body[b - 1];
  int trans_on = 0, proj_on = 0;
  if ((ca == 'X' || ca == 'Y') && cb == '0') {
    trans_on = a;
    proj_on = b;
  } else if ((cb == 'X' || cb == 'Y') && ca == '0') {
    trans_on = b;
    proj_on = a;
  } else {
    throw ConfigError("input pattern must be X or Y on one target and 0 on the other");
  }

  const char op = body[trans_on - 1];
  // X_a 0_b -> cos(2t) X_a 0_b + sin(2t) 0_a Y_b
  // Y_a 0_b -> cos(2t) Y_a 0_b - sin(2t) 0_a X_b
  std::string transfer_body = body;
  transfer_body[trans_on - 1] = '0';
  transfer_body[proj_on - 1] = (op == 'X') ? 'Y' : 'X';
  double transfer_sign = (op == 'X') ? sign : -sign;

  const auto with_sign = [](double s, const std::string& t) {
    return (s < 0 ? "-" : "") + t;
  };
  return {with_sign(sign, body), with_sign(transfer_sign, transfer_body)};
}

SweepResult theta_sweep(const SpinSystem& sys, int a, int b, const std::string& input_expr,
                        const std::vector<double>& theta_grid, const SweepOptions& options) {
  if (theta_grid.size() < 2)
    throw ConfigError("theta sweep needs at least two grid points to fit");

  const auto pair = xy_transfer_pair(input_expr, a, b);
  const DeviationState input = parse_state(input_expr, sys.n_qubits);
  StateBasis fit_basis{{parse_state(pair.stay, sys.n_qubits),
                        parse_state(pair.transfer, sys.n_qubits)}};

  const bool dephase = !options.t2_s.empty();
  SweepResult result;
  result.stay_label = pair.stay;
  result.transfer_label = pair.transfer;

  double sc = 0.0, ss = 0.0, cc = 0.0, s2 = 0.0;
  for (double theta : theta_grid) {
    OperatorMatrix u = options.realize
                           ? options.realize(theta)
                           : gate_library("Uxy", theta, {a, b}, sys.n_qubits).unitary;
    DeviationState out = apply_gate(input, u);
    if (dephase) out = apply_dephasing(out, sys, options.t2_s, options.duration_s);
    const auto coeffs = overlap_coeffs(out, fit_basis);
    result.points.push_back({theta, coeffs[0], coeffs[1]});
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    cc += c * c;
    s2 += s * s;
    sc += coeffs[0] * c;
    ss += coeffs[1] * s;
  }

  result.amp_stay = (cc > 0.0) ? sc / cc : 0.0;
  result.amp_transfer = (s2 > 0.0) ? ss / s2 : 0.0;
  double r1 = 0.0, r2 = 0.0;
  for (const auto& p : result.points) {
    r1 += std::pow(p.stay - result.amp_stay * std::cos(2.0 * p.theta), 2);
    r2 += std::pow(p.transfer - result.amp_transfer * std::sin(2.0 * p.theta), 2);
  }
  result.residual_stay = std::sqrt(r1 / static_cast<double>(result.points.size()));
  result.residual_transfer = std::sqrt(r2 / static_cast<double>(result.points.size()));
  return result;
}

double commensurate_fidelity(const SpinSystem& sys, double tau_s) {
  if (sys.targets.size() != 2)
    throw ConfigError("commensurability check requires exactly two target qubits");
  const int a = sys.targets[0], b = sys.targets[1];
  const double d = sys.dipolar(a, b);
  if (d == 0.0) throw ConfigError("target pair has zero dipolar coupling");
  const double nu_a = sys.shift(a), nu_b = sys.shift(b);

  // Diagonal two-qubit evolutions; basis order 00, 01, 10, 11.
  Eigen::Vector4cd with_zz, without_zz;
  for (int i = 0; i < 4; ++i) {
    const double za = (i & 2) ? -1.0 : 1.0;
    const double zb = (i & 1) ? -1.0 : 1.0;
    with_zz(i) = std::exp(kI * kPi * tau_s * (-nu_a * za - nu_b * zb + d * za * zb));
    without_zz(i) = std::exp(-kI * kPi * tau_s * (nu_a * za + nu_b * zb));
  }
  const Complex tr = (without_zz.conjugate().array() * with_zz.array()).sum();
  return std::norm(tr) / 16.0;
}

bool commensurate_check(const SpinSystem& sys, int m) {
  if (sys.targets.size() != 2)
    throw ConfigError("commensurability check requires exactly two target qubits");
  const int a = sys.targets[0], b = sys.targets[1];
  const double d = sys.dipolar(a, b);
  if (d == 0.0) throw ConfigError("target pair has zero dipolar coupling");
  const double tau = static_cast<double>(m) / d;
  return commensurate_fidelity(sys, tau) >= 1.0 - 1e-9;
}

}  // namespace spinctl
