// Copyright 2026 The ontolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOLAB_CLI_EXPERIMENTS_HPP
#define ONTOLAB_CLI_EXPERIMENTS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ontolab_cli/config.hpp"
#include "ontolab_cli/csv.hpp"

namespace ontolab::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct ExperimentResult {
  std::vector<CsvRow> rows;
  /// `name = value` summary lines recorded in the manifest.
  std::vector<std::string> summary;
};

/// Runs the experiment without touching the filesystem.
ExperimentResult compute(const ExperimentConfig& config);

/// `results.csv` -> `results.manifest.txt`, next to the CSV.
std::filesystem::path manifest_path(const std::filesystem::path& csv_path);

/// Manifest text: the resolved configuration as loadable `key = value`
/// lines, then `#`-prefixed run metadata and summary lines. The timestamp is
/// the only line that differs between identical runs.
std::string manifest_text(const ExperimentConfig& config, const ExperimentResult& result,
                          double wall_seconds, const std::string& timestamp);

/// Resolves, computes and writes the CSV and manifest. Diagnostics go to
/// `err`; returns one of the kExit* statuses.
int run(Experiment experiment, const std::optional<std::filesystem::path>& config_path,
        const Overrides& overrides, const std::optional<std::string>& env_seed,
        std::ostream& err);

std::string version_string();

}  // namespace ontolab::cli

#endif  // ONTOLAB_CLI_EXPERIMENTS_HPP
