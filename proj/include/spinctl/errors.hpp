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

#include <stdexcept>
#include <string>

namespace spinctl {

/// Operator/register size mismatch (non-power-of-two matrix, wrong label
/// length, channel-count mismatch, ...).
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid molecule/run configuration (bad partition, asymmetric couplings,
/// unknown gate name, infeasible optimizer settings, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (state expressions, pulse files). Carries the
/// offending position when known.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position(0) {}
  std::size_t position;
};

}  // namespace spinctl
