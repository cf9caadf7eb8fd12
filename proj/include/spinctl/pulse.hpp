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

#include "spinctl/errors.hpp"

namespace spinctl {

/// Piecewise-constant control amplitudes, one column per channel, in Hz.
/// During propagation channel k contributes pi * amplitude * H_k to the
/// segment Hamiltonian, the same pi convention the drift carries.
struct PulseSequence {
  double dt_s = 0.0;
  std::vector<std::string> channels;  // labels matching build_controls()
  Eigen::MatrixXd amplitudes_hz;      // n_segments x n_channels

  int n_segments() const { return static_cast<int>(amplitudes_hz.rows()); }
  int n_channels() const { return static_cast<int>(amplitudes_hz.cols()); }
  double duration_s() const { return n_segments() * dt_s; }

  /// Throws ConfigError when empty, non-finite, or exceeding max_rf_hz
  /// (ignored when max_rf_hz <= 0).
  void validate(double max_rf_hz = 0.0) const;

  /// Text format: one header line "n_segments dt_s ch1 ch2 ...", then one
  /// line of amplitudes per segment.
  static PulseSequence load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace spinctl
