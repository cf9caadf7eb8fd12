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

#include "spinctl/pulse.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spinctl {

void PulseSequence::validate(double max_rf_hz) const {
  if (n_segments() < 1) throw ConfigError("pulse has no segments");
  if (!(dt_s > 0.0)) throw ConfigError("pulse segment duration must be positive");
  if (n_channels() < 1) throw ConfigError("pulse has no channels");
  if (channels.size() != static_cast<std::size_t>(n_channels()))
    throw ConfigError("pulse channel labels do not match amplitude columns");
  for (int j = 0; j < n_segments(); ++j) {
    for (int k = 0; k < n_channels(); ++k) {
      const double a = amplitudes_hz(j, k);
      if (!std::isfinite(a)) throw ConfigError("pulse amplitude is not finite");
      if (max_rf_hz > 0.0 && std::abs(a) > max_rf_hz * (1.0 + 1e-12))
        throw ConfigError("pulse amplitude exceeds max_rf_hz");
    }
  }
}

PulseSequence PulseSequence::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pulse file: " + path);

  std::string header;
  if (!std::getline(in, header)) throw ParseError("pulse file is empty");
  std::istringstream hs(header);
  int n_segments = 0;
  double dt = 0.0;
  if (!(hs >> n_segments >> dt))
    throw ParseError("pulse header must start with 'n_segments dt_s'");
  PulseSequence pulse;
  pulse.dt_s = dt;
  std::string label;
  while (hs >> label) pulse.channels.push_back(label);
  if (n_segments < 1 || pulse.channels.empty())
    throw ParseError("pulse header lists no segments or no channels");

  pulse.amplitudes_hz.resize(n_segments, static_cast<int>(pulse.channels.size()));
  for (int j = 0; j < n_segments; ++j) {
    std::string line;
    if (!std::getline(in, line))
      throw ParseError("pulse file ends after " + std::to_string(j) + " of " +
                       std::to_string(n_segments) + " segments");
    std::istringstream ls(line);
    for (std::size_t k = 0; k < pulse.channels.size(); ++k) {
      if (!(ls >> pulse.amplitudes_hz(j, static_cast<int>(k))))
        throw ParseError("segment " + std::to_string(j + 1) + " has fewer than " +
                         std::to_string(pulse.channels.size()) + " amplitudes");
    }
  }
  pulse.validate();
  return pulse;
}

void PulseSequence::save(const std::string& path) const {
  validate();
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write pulse file: " + path);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", dt_s);
  out << n_segments() << " " << buf;
  for (const auto& c : channels) out << " " << c;
  out << "\n";
  for (int j = 0; j < n_segments(); ++j) {
    for (int k = 0; k < n_channels(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", amplitudes_hz(j, k));
      out << (k ? " " : "") << buf;
    }
    out << "\n";
  }
}

}  // namespace spinctl
