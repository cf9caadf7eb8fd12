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

#include "spinctl/dynamics.hpp"
#include "spinctl/spin_system.hpp"

namespace spinctl {

/// Free-induction decay: complex quadrature signal <X> - i<Y> summed over the
/// observed species, sampled every dwell_s. The sign pairing puts a spin with
/// positive chemical shift at positive frequency.
struct Fid {
  double dwell_s = 0.0;
  std::vector<Complex> samples;
  std::string observed_species;
  std::string state_label;
};

/// Complex spectrum on a strictly increasing frequency axis centred at 0.
struct Spectrum {
  std::vector<double> freqs_hz;
  std::vector<Complex> values;
  std::string source_label;
  double line_broadening_hz = 0.0;

  double bin_hz() const {
    return freqs_hz.size() > 1 ? freqs_hz[1] - freqs_hz[0] : 0.0;
  }
};

/// Evolve the state under the drift Hamiltonian by a precomputed per-dwell
/// propagator and record the quadrature signal of the observed species. When
/// t2_s is nonempty the per-qubit dephasing channel is interleaved with every
/// dwell step.
Fid simulate_fid(const SpinSystem& sys, const DeviationState& state,
                 const std::string& species, int n_points, double dwell_s,
                 const std::vector<double>& t2_s = {});

/// Dwell time that accommodates every transition frequency of the drift
/// without aliasing (spectral width 2.2x the eigenvalue span).
double auto_dwell_s(const SpinSystem& sys);

/// DFT of the FID after optional exponential apodization
/// (exp(-pi * line_broadening_hz * t)) and zero-filling to
/// zero_fill_factor * n_points. Values are scaled by dwell_s so the result
/// approximates the continuous Fourier transform (Parseval-consistent).
Spectrum to_spectrum(const Fid& fid, int zero_fill_factor = 2,
                     double line_broadening_hz = 0.0);

/// Bin centres of local maxima of |values| above rel_threshold * max.
std::vector<double> peak_positions(const Spectrum& spectrum, double rel_threshold = 0.05);

struct OverlapFit {
  Eigen::VectorXd coeffs;
  Eigen::VectorXd stderrs;
  double residual_norm = 0.0;
  double condition_number = 0.0;
};

/// Real least-squares fit of the measured spectrum as a linear combination of
/// reference spectra, real and imaginary parts jointly. Standard errors come
/// from the residual variance and the normal-equations inverse. Throws
/// ConfigError on mismatched axes or a rank-deficient reference set.
OverlapFit fit_overlap(const Spectrum& measured, const std::vector<Spectrum>& references);

struct FidSettings {
  int n_points = 2048;
  double dwell_s = 0.0;  // 0: auto_dwell_s
  int zero_fill_factor = 2;
  double line_broadening_hz = 0.0;
};

struct InversionReport {
  double coefficient = 0.0;  // fitted inversion coefficient c
  double stderr_c = 0.0;
  Spectrum reference;
  Spectrum result;
  std::string input_label;
};

/// The line-inversion experiment: start from the sum of Y on every target
/// qubit, take its drift spectrum as the reference, apply the supplied gate
/// realization, and fit the resulting spectrum against the reference. An
/// ideal pi z-rotation pair gives c = -1; dephasing during the gate shrinks
/// |c|. fid_t2_s (optional) adds transverse decay during acquisition of both
/// spectra.
InversionReport inversion_experiment(
    const SpinSystem& sys,
    const std::function<DeviationState(const DeviationState&)>& gate,
    const std::vector<double>& fid_t2_s = {}, const FidSettings& settings = {});

}  // namespace spinctl
