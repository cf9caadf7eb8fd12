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

#include "spinctl/spin_system.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

namespace spinctl {

namespace {

constexpr double kPi = std::numbers::pi;

std::string pair_labels(int n, int i, char a, int j, char b) {
  std::string s(n, 'E');
  s[i - 1] = a;
  s[j - 1] = b;
  return s;
}

std::string single_label(int n, int i, char a) {
  std::string s(n, 'E');
  s[i - 1] = a;
  return s;
}

}  // namespace

bool SpinSystem::is_actuator(int qubit) const {
  return std::find(actuators.begin(), actuators.end(), qubit) != actuators.end();
}

std::vector<std::string> SpinSystem::species_list() const {
  std::vector<std::string> out;
  for (const auto& s : species)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

void SpinSystem::validate() const {
  if (n_qubits < 1) throw ConfigError("n_qubits must be positive");
  if (static_cast<int>(species.size()) != n_qubits)
    throw ConfigError("species list must have one label per qubit");
  for (const auto& s : species)
    if (s.empty()) throw ConfigError("empty species label");
  if (static_cast<int>(shifts_hz.size()) != n_qubits)
    throw ConfigError("shifts_hz must have one entry per qubit");
  for (const auto* m : {&dipolar_hz, &scalar_hz}) {
    if (m->rows() != n_qubits || m->cols() != n_qubits)
      throw ConfigError("coupling matrix size does not match n_qubits");
    for (int i = 0; i < n_qubits; ++i) {
      if ((*m)(i, i) != 0.0)
        throw ConfigError("coupling matrix has a nonzero diagonal entry");
      for (int j = 0; j < n_qubits; ++j)
        if ((*m)(i, j) != (*m)(j, i))
          throw ConfigError("coupling matrix is not symmetric");
    }
  }
  if (actuators.empty()) throw ConfigError("actuator set is empty");
  if (targets.empty()) throw ConfigError("target set is empty");
  std::set<int> seen;
  for (int q : actuators) {
    if (q < 1 || q > n_qubits)
      throw ConfigError("actuator index " + std::to_string(q) + " out of range");
    if (!seen.insert(q).second)
      throw ConfigError("duplicate actuator index " + std::to_string(q));
  }
  for (int q : targets) {
    if (q < 1 || q > n_qubits)
      throw ConfigError("target index " + std::to_string(q) + " out of range");
    if (!seen.insert(q).second)
      throw ConfigError("qubit " + std::to_string(q) + " listed twice in the partition");
  }
  if (static_cast<int>(seen.size()) != n_qubits)
    throw ConfigError("actuators and targets must cover every qubit");
}

SpinSystem SpinSystem::from_config_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("molecule config is not valid JSON: ") + e.what());
  }

  SpinSystem sys;
  try {
    sys.n_qubits = j.at("n_qubits").get<int>();
    if (sys.n_qubits < 1 || sys.n_qubits > 16)
      throw ConfigError("n_qubits out of supported range [1, 16]");
    sys.species = j.at("species").get<std::vector<std::string>>();
    sys.shifts_hz = j.at("shifts_hz").get<std::vector<double>>();
    sys.actuators = j.at("actuators").get<std::vector<int>>();
    sys.name = j.value("name", std::string{});

    const int n = sys.n_qubits;
    sys.dipolar_hz = Eigen::MatrixXd::Zero(n, n);
    sys.scalar_hz = Eigen::MatrixXd::Zero(n, n);
    for (const char* key : {"dipolar_hz", "scalar_hz"}) {
      if (!j.contains(key)) {
        if (std::string(key) == "dipolar_hz")
          throw ConfigError("missing dipolar_hz");
        continue;  // scalar couplings default to zero
      }
      Eigen::MatrixXd& m = (std::string(key) == "dipolar_hz") ? sys.dipolar_hz : sys.scalar_hz;
      std::set<std::pair<int, int>> pairs;
      for (const auto& entry : j.at(key)) {
        if (!entry.is_array() || entry.size() != 3)
          throw ConfigError(std::string(key) + " entries must be [i, j, value]");
        const int a = entry[0].get<int>();
        const int b = entry[1].get<int>();
        const double v = entry[2].get<double>();
        if (a < 1 || a > n || b < 1 || b > n)
          throw ConfigError(std::string(key) + " index out of range: [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
        if (a == b)
          throw ConfigError(std::string(key) + " has a self-coupling on qubit " +
                            std::to_string(a));
        const auto p = std::minmax(a, b);
        if (!pairs.insert(p).second)
          throw ConfigError(std::string(key) + " lists pair (" + std::to_string(p.first) +
                            ", " + std::to_string(p.second) + ") more than once");
        m(a - 1, b - 1) = v;
        m(b - 1, a - 1) = v;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("molecule config: ") + e.what());
  }

  std::sort(sys.actuators.begin(), sys.actuators.end());
  for (int q = 1; q <= sys.n_qubits; ++q)
    if (!sys.is_actuator(q)) sys.targets.push_back(q);

  sys.validate();
  return sys;
}

SpinSystem SpinSystem::from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open molecule config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_config_text(ss.str());
}

std::vector<PauliString> drift_terms(const SpinSystem& sys) {
  sys.validate();
  const int n = sys.n_qubits;
  std::vector<PauliString> terms;

  for (int i = 1; i <= n; ++i) {
    if (sys.shift(i) != 0.0)
      terms.emplace_back(single_label(n, i, 'Z'), -kPi * sys.shift(i));
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double d = sys.dipolar(i, j);
      if (d != 0.0) {
        if (sys.same_species(i, j)) {
          terms.emplace_back(pair_labels(n, i, 'Z', j, 'Z'), kPi * d);
          terms.emplace_back(pair_labels(n, i, 'X', j, 'X'), -kPi * d / 2.0);
          terms.emplace_back(pair_labels(n, i, 'Y', j, 'Y'), -kPi * d / 2.0);
        } else {
          terms.emplace_back(pair_labels(n, i, 'Z', j, 'Z'), kPi * d);
        }
      }
      const double jc = sys.scalar(i, j);
      if (jc != 0.0) {
        if (sys.same_species(i, j)) {
          terms.emplace_back(pair_labels(n, i, 'X', j, 'X'), kPi * jc / 2.0);
          terms.emplace_back(pair_labels(n, i, 'Y', j, 'Y'), kPi * jc / 2.0);
          terms.emplace_back(pair_labels(n, i, 'Z', j, 'Z'), kPi * jc / 2.0);
        } else {
          terms.emplace_back(pair_labels(n, i, 'Z', j, 'Z'), kPi * jc / 2.0);
        }
      }
    }
  }
  return terms;
}

OperatorMatrix build_drift(const SpinSystem& sys) {
  const auto terms = drift_terms(sys);
  if (terms.empty()) return OperatorMatrix::Zero(sys.dim(), sys.dim());
  return pauli_sum_to_matrix(terms);
}

std::vector<ControlChannel> build_controls(const SpinSystem& sys, ControlMode mode) {
  sys.validate();
  const int n = sys.n_qubits;
  std::vector<ControlChannel> channels;

  if (mode == ControlMode::Selective) {
    for (int q : sys.actuators) {
      channels.push_back({"X" + std::to_string(q),
                          pauli_to_matrix({single_label(n, q, 'X'), 1.0})});
      channels.push_back({"Y" + std::to_string(q),
                          pauli_to_matrix({single_label(n, q, 'Y'), 1.0})});
    }
    return channels;
  }

  for (const auto& sp : sys.species_list()) {
    std::vector<PauliString> xs, ys;
    for (int q : sys.actuators) {
      if (sys.species[q - 1] != sp) continue;
      xs.emplace_back(single_label(n, q, 'X'), 1.0);
      ys.emplace_back(single_label(n, q, 'Y'), 1.0);
    }
    if (xs.empty()) continue;
    channels.push_back({"X(" + sp + ")", pauli_sum_to_matrix(xs)});
    channels.push_back({"Y(" + sp + ")", pauli_sum_to_matrix(ys)});
  }
  return channels;
}

std::vector<std::string> degeneracy_warnings(const SpinSystem& sys, double rel_tol) {
  std::vector<std::string> warnings;
  const int n = sys.n_qubits;
  const auto close = [rel_tol](double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sys.same_species(i, j) && close(sys.shift(i), sys.shift(j)))
        warnings.push_back("equal chemical shifts on same-species qubits " +
                           std::to_string(i) + " and " + std::to_string(j));

  std::vector<std::tuple<double, int, int>> couplings;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sys.dipolar(i, j) != 0.0) couplings.emplace_back(sys.dipolar(i, j), i, j);
  for (std::size_t a = 0; a < couplings.size(); ++a)
    for (std::size_t b = a + 1; b < couplings.size(); ++b)
      if (close(std::get<0>(couplings[a]), std::get<0>(couplings[b])))
        warnings.push_back(
            "equal dipolar couplings D(" + std::to_string(std::get<1>(couplings[a])) + "," +
            std::to_string(std::get<2>(couplings[a])) + ") and D(" +
            std::to_string(std::get<1>(couplings[b])) + "," +
            std::to_string(std::get<2>(couplings[b])) + ")");

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sys.dipolar(i, j) == 0.0 && (sys.is_actuator(i) != sys.is_actuator(j)))
        warnings.push_back("zero dipolar coupling between actuator/target pair (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
  return warnings;
}

}  // namespace spinctl
