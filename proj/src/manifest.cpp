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

#include "spinctl/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include <json.hpp>

#include "spinctl/errors.hpp"

namespace spinctl {

void RunManifest::save(const std::string& directory) const {
  nlohmann::json j;
  j["tool"] = "spinctl";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["arguments"] = arguments;
  if (!molecule_path.empty()) j["molecule"] = molecule_path;
  j["seed"] = seed;
  j["parameters"] = parameters;
  j["outputs"] = outputs;

  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  j["timestamp"] = stamp;

  const std::string path = directory + "/" + manifest_name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

CsvWriter::CsvWriter(const std::string& path, const RunManifest& manifest,
                     const std::vector<std::string>& columns)
    : out_(path) {
  if (!out_) throw ConfigError("cannot write output file: " + path);
  out_ << "# manifest: " << manifest.manifest_name << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

std::string CsvWriter::format_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void CsvWriter::write_row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    out_ << (i ? "," : "") << format_number(values[i]);
  out_ << "\n";
}

void CsvWriter::write_raw_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

}  // namespace spinctl
