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

#include "spinctl/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace spinctl {

namespace {

constexpr Complex kI{0.0, 1.0};

// Accepts skew-Hermitian as-is, multiplies Hermitian by i, rejects the rest.
OperatorMatrix skewify(const OperatorMatrix& op, double tol_rel) {
  const double scale = op.norm();
  if (scale == 0.0) return op;
  const double herm = (op - op.adjoint()).norm() / scale;
  const double skew = (op + op.adjoint()).norm() / scale;
  if (skew <= tol_rel) return op;
  if (herm <= tol_rel) return kI * op;
  throw ConfigError("operator is neither Hermitian nor skew-Hermitian");
}

// Bit masks describing Pauli string `code` (two bits per qubit, qubit 1 in
// the highest pair, 0=E 1=X 2=Y 3=Z). xmask flips basis indices, and
// phase(col) = i^{y_count} (-1)^{popcount(col & sign_mask)}.
struct PauliCode {
  int xmask = 0;
  int sign_mask = 0;  // qubits with Y or Z
  int y_count = 0;

  PauliCode(long code, int n) {
    for (int q = 0; q < n; ++q) {
      const int label = static_cast<int>((code >> (2 * (n - 1 - q))) & 3);
      const int bit = 1 << (n - 1 - q);
      if (label == 1 || label == 2) xmask |= bit;
      if (label == 2 || label == 3) sign_mask |= bit;
      if (label == 2) ++y_count;
    }
  }

  Complex phase(int col) const {
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex p = kIPow[y_count & 3];
    if (__builtin_popcount(col & sign_mask) & 1) p = -p;
    return p;
  }
};

}  // namespace

// Elements are i times real Pauli combinations. Working with the real
// coefficient vector w (w_r = Im Tr(P_r e) / sqrt(2^n), so |w| equals the
// Frobenius norm) keeps Gram-Schmidt inside that space exactly: rounding
// noise cannot build up trace or non-Hermitian components across long
// commutator chains.
Eigen::VectorXd AlgebraBasis::pauli_flatten(const OperatorMatrix& skew) const {
  const int n = n_qubits_;
  const int dim = 1 << n;
  const long n_codes = 1L << (2 * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::VectorXd w(n_codes);
  for (long code = 0; code < n_codes; ++code) {
    const PauliCode pc(code, n);
    Complex tr{0.0, 0.0};
    for (int j = 0; j < dim; ++j) tr += pc.phase(j) * skew(j, j ^ pc.xmask);
    w(code) = tr.imag() * scale;
  }
  return w;
}

OperatorMatrix AlgebraBasis::pauli_unflatten(const Eigen::VectorXd& w) const {
  const int n = n_qubits_;
  const int dim = 1 << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (long code = 0; code < w.size(); ++code) {
    if (w(code) == 0.0) continue;
    const PauliCode pc(code, n);
    const Complex coeff = kI * (w(code) * scale);
    for (int j = 0; j < dim; ++j) m(j ^ pc.xmask, j) += coeff * pc.phase(j);
  }
  return m;
}

AlgebraBasis::AlgebraBasis(int n_qubits, double tol) : n_qubits_(n_qubits), tol_(tol) {
  const long vec_len = 1L << (2 * n_qubits);
  flat_.resize(std::min(vec_len, 64L), vec_len);
}

void AlgebraBasis::append(const OperatorMatrix& element, const Eigen::VectorXd& flat) {
  if (rows_used_ == flat_.rows())
    flat_.conservativeResize(2 * flat_.rows(), Eigen::NoChange);
  flat_.row(rows_used_++) = flat.transpose();
  elements_.push_back(element);
}

double AlgebraBasis::project_out(Eigen::VectorXd& w, int passes) const {
  if (rows_used_ == 0) return w.norm();
  const auto rows = flat_.topRows(rows_used_);
  double norm = 0.0;
  for (int pass = 0; pass < passes; ++pass) {
    Eigen::VectorXd coeff = rows * w;
    w.noalias() -= rows.transpose() * coeff;
    norm = w.norm();
    if (norm <= tol_) break;  // clearly dependent, no refinement needed
  }
  return norm;
}

AlgebraBasis closure(const std::vector<OperatorMatrix>& generators, double tol) {
  if (generators.empty()) throw ConfigError("closure needs at least one generator");
  if (tol <= 0.0) throw ConfigError("closure tolerance must be positive");

  const int n = qubit_count(generators.front());
  const long dim = 1L << n;
  const long max_algebra_dim = (1L << (2 * n)) - 1;  // traceless generators

  double gen_scale = 0.0;
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw DimensionError("generators have mismatched dimensions");
    gen_scale = std::max(gen_scale, g.norm());
  }
  if (gen_scale == 0.0) throw ConfigError("all generators are zero");

  AlgebraBasis basis(n, tol);

  // Commutators of unit-norm elements carry absolute rounding junk of order
  // 1e-13. Candidates below the floor would have a junk fraction above tol
  // after normalization, so they are treated as zero.
  const double noise_floor = std::max(1e-12, 1e-12 / tol);

  // Gram-Schmidt rounding noise gets amplified each time a small residual is
  // normalized, and compounds along commutator chains. The identity
  // coefficient w(0) is an exact canary for that noise: the true algebra of
  // traceless generators never touches the identity, so any weight there is
  // accumulated junk. Track the worst accepted level and refuse residuals
  // that are not safely above it.
  double junk_level = 1e-15;

  const auto try_add = [&](const OperatorMatrix& candidate, double zero_floor) {
    Eigen::VectorXd w = basis.pauli_flatten(candidate);
    const double norm = w.norm();
    if (norm <= zero_floor) return;
    w /= norm;
    const double residual = basis.project_out(w, 2);
    if (residual <= std::max(tol, 30.0 * junk_level)) return;
    w /= residual;  // project_out left the orthogonal component in w
    junk_level = std::max(junk_level, std::abs(w(0)));
    basis.append(basis.pauli_unflatten(w), w);
    if (basis.dim() > max_algebra_dim)
      throw std::logic_error("algebra dimension exceeded 4^n - 1; closure is inconsistent");
  };

  for (const auto& g : generators) try_add(skewify(g, 1e-10), 1e-12 * gen_scale);
  if (basis.dim() == 0) throw ConfigError("all generators are zero");

  // Commutator sweep: each unordered pair (lo, hi) is visited exactly once,
  // in order of the later element; newly added elements extend the loop.
  OperatorMatrix comm(dim, dim);
  for (int hi = 1; hi < basis.dim(); ++hi) {
    for (int lo = 0; lo < hi; ++lo) {
      const auto& a = basis.elements()[lo];
      const auto& b = basis.elements()[hi];
      comm.noalias() = a * b;
      comm.noalias() -= b * a;
      try_add(comm, noise_floor);
    }
  }
  return basis;
}

MembershipResult membership(const OperatorMatrix& op, const AlgebraBasis& basis) {
  const long dim = 1L << basis.n_qubits();
  if (op.rows() != dim || op.cols() != dim)
    throw DimensionError("operator dimension does not match the algebra's register");
  const OperatorMatrix skew = skewify(op, 1e-10);
  Eigen::VectorXd w = basis.pauli_flatten(skew);
  const double norm = w.norm();
  if (norm == 0.0) return {true, 0.0};
  w /= norm;
  const double residual = basis.project_out(w, 2);
  return {residual < basis.tol(), residual};
}

bool subsystem_full_control(const AlgebraBasis& basis, const std::vector<int>& qubits) {
  if (qubits.empty()) throw ConfigError("subsystem must be a nonempty set of qubits");
  const int n = basis.n_qubits();
  for (int q : qubits)
    if (q < 1 || q > n)
      throw ConfigError("subsystem qubit " + std::to_string(q) + " out of range");

  static const char kLabels[4] = {'E', 'X', 'Y', 'Z'};
  const long total = 1L << (2 * qubits.size());
  for (long code = 1; code < total; ++code) {  // skip the all-E string
    std::string labels(n, 'E');
    long c = code;
    for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) {
      labels[*it - 1] = kLabels[c & 3];
      c >>= 2;
    }
    const auto result = membership(pauli_to_matrix({labels, 1.0}), basis);
    if (!result.in_algebra) return false;
  }
  return true;
}

std::vector<std::vector<PauliString>> label_basis(const AlgebraBasis& basis, double cutoff) {
  std::vector<std::vector<PauliString>> out;
  out.reserve(basis.dim());
  for (const auto& e : basis.elements()) {
    auto terms = matrix_to_pauli(OperatorMatrix(-kI * e), cutoff);
    std::sort(terms.begin(), terms.end(), [](const PauliString& a, const PauliString& b) {
      const double ma = std::abs(a.coefficient), mb = std::abs(b.coefficient);
      if (ma != mb) return ma > mb;
      return a.labels < b.labels;
    });
    out.push_back(std::move(terms));
  }
  return out;
}

}  // namespace spinctl
