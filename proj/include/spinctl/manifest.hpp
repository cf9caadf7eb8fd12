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
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace spinctl {

inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance record written next to every command's outputs. The manifest
/// holds the timestamp; data files only name the manifest, so their bodies
/// stay byte-identical across reruns.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::string molecule_path;
  std::uint64_t seed = 0;
  std::map<std::string, double> parameters;  // tolerances, durations, ...
  std::vector<std::string> outputs;
  std::string manifest_name = "run.manifest.json";

  void save(const std::string& directory) const;
};

/// CSV writer with fixed "%.12g" number formatting and a leading comment line
/// naming the producing manifest.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const RunManifest& manifest,
            const std::vector<std::string>& columns);

  void write_row(const std::vector<double>& values);
  void write_raw_row(const std::vector<std::string>& cells);

  static std::string format_number(double v);

 private:
  std::ofstream out_;
};

}  // namespace spinctl
