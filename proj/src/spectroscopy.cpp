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

#include "spinctl/spectroscopy.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "spinctl/gates.hpp"

namespace spinctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Sum of the given single-qubit operator over all qubits of one species.
OperatorMatrix species_sum(const SpinSystem& sys, const std::string& species, char op) {
  std::vector<PauliString> terms;
  for (int q = 1; q <= sys.n_qubits; ++q) {
    if (sys.species[q - 1] != species) continue;
    std::string labels(sys.n_qubits, 'E');
    labels[q - 1] = op;
    terms.emplace_back(labels, 1.0);
  }
  if (terms.empty())
    throw ConfigError("species '" + species + "' not present in the register");
  return pauli_sum_to_matrix(terms);
}

}  // namespace

double auto_dwell_s(const SpinSystem& sys) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(build_drift(sys));
  const double span_hz =
      (eig.eigenvalues().maxCoeff() - eig.eigenvalues().minCoeff()) / (2.0 * kPi);
  return 1.0 / (2.2 * std::max(span_hz, 1.0));
}

Fid simulate_fid(const SpinSystem& sys, const DeviationState& state,
                 const std::string& species, int n_points, double dwell_s,
                 const std::vector<double>& t2_s) {
  if (n_points < 2) throw ConfigError("FID needs at least two points");
  if (!(dwell_s > 0.0)) throw ConfigError("dwell time must be positive");
  if (state.matrix.rows() != sys.dim())
    throw DimensionError("state dimension does not match the register");

  const OperatorMatrix mx = species_sum(sys, species, 'X');
  const OperatorMatrix my = species_sum(sys, species, 'Y');
  const OperatorMatrix step = hermitian_exp(build_drift(sys), -kI * dwell_s);
  const bool dephase = !t2_s.empty();
  Eigen::MatrixXd damping;
  if (dephase) damping = dephasing_damping(sys.n_qubits, t2_s, dwell_s);

  Fid fid;
  fid.dwell_s = dwell_s;
  fid.observed_species = species;
  fid.state_label = state.label;
  fid.samples.reserve(n_points);

  OperatorMatrix rho = state.matrix;
  for (int j = 0; j < n_points; ++j) {
    const double x = mx.conjugate().cwiseProduct(rho).sum().real();
    const double y = my.conjugate().cwiseProduct(rho).sum().real();
    fid.samples.emplace_back(x, -y);
    rho = step * rho * step.adjoint();
    if (dephase) rho = rho.cwiseProduct(damping.cast<Complex>());
  }
  return fid;
}

Spectrum to_spectrum(const Fid& fid, int zero_fill_factor, double line_broadening_hz) {
  if (fid.samples.size() < 2 || !(fid.dwell_s > 0.0))
    throw ConfigError("invalid FID");
  if (zero_fill_factor < 1) throw ConfigError("zero-fill factor must be >= 1");

  const std::size_t n_in = fid.samples.size();
  const std::size_t n = n_in * static_cast<std::size_t>(zero_fill_factor);
  std::vector<Complex> padded(n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n_in; ++j) {
    const double t = static_cast<double>(j) * fid.dwell_s;
    const double apod =
        line_broadening_hz > 0.0 ? std::exp(-kPi * line_broadening_hz * t) : 1.0;
    padded[j] = fid.samples[j] * apod;
  }

  std::vector<Complex> transformed(n);
  Eigen::FFT<double> fft;
  fft.fwd(transformed, padded);

  Spectrum spec;
  spec.source_label = fid.state_label;
  spec.line_broadening_hz = line_broadening_hz;
  spec.freqs_hz.resize(n);
  spec.values.resize(n);
  const double df = 1.0 / (static_cast<double>(n) * fid.dwell_s);
  const std::size_t half = n / 2;
  // fftshift: negative frequencies first, axis strictly increasing through 0.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = (k + half) % n;
    const double f = (static_cast<double>(k) - static_cast<double>(half)) * df;
    spec.freqs_hz[k] = f;
    spec.values[k] = transformed[src] * fid.dwell_s;
  }
  return spec;
}

std::vector<double> peak_positions(const Spectrum& spectrum, double rel_threshold) {
  std::vector<double> mags(spectrum.values.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < spectrum.values.size(); ++k) {
    mags[k] = std::abs(spectrum.values[k]);
    peak = std::max(peak, mags[k]);
  }
  std::vector<double> out;
  if (peak <= 0.0) return out;
  const double floor = rel_threshold * peak;
  for (std::size_t k = 1; k + 1 < mags.size(); ++k) {
    if (mags[k] >= floor && mags[k] > mags[k - 1] && mags[k] >= mags[k + 1])
      out.push_back(spectrum.freqs_hz[k]);
  }
  return out;
}

OverlapFit fit_overlap(const Spectrum& measured, const std::vector<Spectrum>& references) {
  if (references.empty()) throw ConfigError("no reference spectra given");
  const std::size_t n = measured.freqs_hz.size();
  for (const auto& ref : references) {
    if (ref.freqs_hz.size() != n)
      throw ConfigError("reference and measured spectra have different lengths");
    for (std::size_t k = 0; k < n; ++k) {
      const double scale = std::max({std::abs(measured.freqs_hz[k]), 1.0});
      if (std::abs(ref.freqs_hz[k] - measured.freqs_hz[k]) > 1e-9 * scale)
        throw ConfigError("reference and measured frequency axes differ");
    }
  }

  const std::size_t rows = 2 * n;
  const int p = static_cast<int>(references.size());
  Eigen::MatrixXd a(rows, p);
  Eigen::VectorXd b(rows);
  for (std::size_t k = 0; k < n; ++k) {
    b(k) = measured.values[k].real();
    b(n + k) = measured.values[k].imag();
    for (int c = 0; c < p; ++c) {
      a(k, c) = references[c].values[k].real();
      a(n + k, c) = references[c].values[k].imag();
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0 || sv(p - 1) < 1e-12 * sv(0))
    throw ConfigError("reference spectra are linearly dependent (rank-deficient fit)");

  OverlapFit fit;
  fit.condition_number = sv(0) / sv(p - 1);
  fit.coeffs = svd.solve(b);
  const Eigen::VectorXd residual = a * fit.coeffs - b;
  fit.residual_norm = residual.norm();
  const double dof = static_cast<double>(rows) - static_cast<double>(p);
  const double sigma2 = dof > 0.0 ? residual.squaredNorm() / dof : 0.0;
  fit.stderrs.resize(p);
  const auto& v = svd.matrixV();
  for (int i = 0; i < p; ++i) {
    double cov = 0.0;
    for (int j = 0; j < p; ++j) cov += v(i, j) * v(i, j) / (sv(j) * sv(j));
    fit.stderrs(i) = std::sqrt(sigma2 * cov);
  }
  return fit;
}

InversionReport inversion_experiment(
    const SpinSystem& sys,
    const std::function<DeviationState(const DeviationState&)>& gate,
    const std::vector<double>& fid_t2_s, const FidSettings& settings) {
  if (!gate) throw ConfigError("no gate realization given");

  std::string expr;
  for (int t : sys.targets) {
    std::string term(sys.n_qubits, 'E');
    term[t - 1] = 'Y';
    expr += (expr.empty() ? "" : "+") + term;
  }
  const DeviationState input = parse_state(expr, sys.n_qubits);
  const std::string species = sys.species[sys.targets.front() - 1];
  const double dwell = settings.dwell_s > 0.0 ? settings.dwell_s : auto_dwell_s(sys);

  const auto spectrum_of = [&](const DeviationState& s) {
    return to_spectrum(simulate_fid(sys, s, species, settings.n_points, dwell, fid_t2_s),
                       settings.zero_fill_factor, settings.line_broadening_hz);
  };

  InversionReport report;
  report.input_label = expr;
  report.reference = spectrum_of(input);
  report.result = spectrum_of(gate(input));
  const OverlapFit fit = fit_overlap(report.result, {report.reference});
  report.coefficient = fit.coeffs(0);
  report.stderr_c = fit.stderrs(0);
  return report;
}

}  // namespace spinctl
