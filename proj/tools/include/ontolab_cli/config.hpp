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

#ifndef ONTOLAB_CLI_CONFIG_HPP
#define ONTOLAB_CLI_CONFIG_HPP

// Experiment configuration: line-oriented `key = value` text with `#`
// comments, overridden by command-line flags, with ONTOLAB_SEED as the
// lowest-priority seed source.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontolab/engine.hpp"
#include "ontolab/models.hpp"

namespace ontolab::cli {

enum class Experiment { born_sweep, delta_opt, contextuality, repeatability, sequential, marble_check };

std::string_view to_string(Experiment e);
/// Throws ConfigError on an unknown name.
Experiment parse_experiment(std::string_view name);
std::vector<std::string_view> experiment_names();

/// Raised for any invalid or missing configuration value; `key()` names the
/// offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Parses `key = value` lines. Blank lines and `#` comments are skipped;
/// duplicate keys, unknown keys and lines without '=' throw ConfigError.
KeyValues parse_config_text(std::string_view text);

/// Every key the configuration format accepts.
const std::vector<std::string>& known_keys();

/// Command-line overrides; set fields win over the config file.
struct Overrides {
  std::optional<std::string> seed;
  std::optional<std::string> n_samples;
  std::optional<std::string> delta;
  std::optional<std::string> out;
  std::optional<std::string> workers;
};

enum class SeedSource { flag, config, environment, fallback };
std::string_view to_string(SeedSource s);

inline constexpr std::uint64_t kFallbackSeed = 1;

struct ExperimentConfig {
  Experiment experiment = Experiment::born_sweep;
  std::optional<ModelSpec> model;

  double theta_start = 0.0;
  double theta_stop = 1.5707963267948966;
  int theta_count = 19;
  std::vector<double> delta_grid;
  std::vector<double> alpha_grid;

  std::int64_t n_samples = 0;
  int n_contexts = 1000;
  std::uint64_t seed = kFallbackSeed;
  SeedSource seed_source = SeedSource::fallback;
  int n_workers = 1;
  Sampler sampler = Sampler::conditional;
  std::string out;

  std::string law = "haar";        ///< contextuality: haar | epistemic
  std::string update = "both";     ///< repeatability, sequential: collapse | bayes | both
  double theta = 0.5;              ///< prepared state cos θ|0> + sin θ|1>
  std::vector<char> chain;         ///< sequential: context labels A, B, C
  double rotation = 0.6;           ///< angle of the B / C context rotations

  // Haar-law contextuality dimensions when no model is given.
  int system_dim = 3;
  int ontic_dim = 3;

  std::vector<double> theta_grid() const;
  /// Resolved configuration as `key = value` lines, loadable with
  /// parse_config_text.
  std::string to_text() const;
};

/// Merges config-file values, overrides and the environment seed, validates
/// every value and applies per-experiment required keys. `env_seed` is the
/// value of ONTOLAB_SEED, if set.
ExperimentConfig resolve_config(Experiment experiment, const KeyValues& file_values,
                                const Overrides& overrides,
                                const std::optional<std::string>& env_seed);

}  // namespace ontolab::cli

#endif  // ONTOLAB_CLI_CONFIG_HPP
