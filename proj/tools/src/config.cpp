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

#include "ontolab_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ontolab/errors.hpp"

namespace ontolab::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_real(const std::string& key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ConfigError(key, "invalid value for '" + key + "': expected a real number, got '" +
                               std::string(text) + "'");
  return value;
}

template <class Int>
Int to_integer(const std::string& key, std::string_view text, Int min_value) {
  text = trim(text);
  Int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ConfigError(key, "invalid value for '" + key + "': expected an integer, got '" +
                               std::string(text) + "'");
  if (value < min_value)
    throw ConfigError(key, "invalid value for '" + key + "': must be at least " +
                               std::to_string(min_value));
  return value;
}

std::vector<double> to_grid(const std::string& key, std::string_view text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
    grid.push_back(to_real(key, item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return grid;
}

std::string real_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_text(const std::vector<double>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out += ',';
    out += real_text(grid[i]);
  }
  return out;
}

void require(const KeyValues& kv, const std::string& key, Experiment e) {
  if (!kv.contains(key))
    throw ConfigError(key, "missing required key '" + key + "' for experiment '" +
                               std::string(to_string(e)) + "'");
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::born_sweep: return "born-sweep";
    case Experiment::delta_opt: return "delta-opt";
    case Experiment::contextuality: return "contextuality";
    case Experiment::repeatability: return "repeatability";
    case Experiment::sequential: return "sequential";
    case Experiment::marble_check: return "marble-check";
  }
  return "unknown";
}

std::vector<std::string_view> experiment_names() {
  return {"born-sweep", "delta-opt", "contextuality", "repeatability", "sequential", "marble-check"};
}

Experiment parse_experiment(std::string_view name) {
  for (Experiment e : {Experiment::born_sweep, Experiment::delta_opt, Experiment::contextuality,
                       Experiment::repeatability, Experiment::sequential,
                       Experiment::marble_check})
    if (to_string(e) == name) return e;
  throw ConfigError("experiment", "unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(SeedSource s) {
  switch (s) {
    case SeedSource::flag: return "flag";
    case SeedSource::config: return "config";
    case SeedSource::environment: return "environment";
    case SeedSource::fallback: return "default";
  }
  return "unknown";
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "variant", "d",        "D",         "delta",      "theta_start", "theta_stop",
      "theta_count", "delta_grid", "alpha_grid", "n_samples", "n_contexts", "seed",
      "workers", "out",      "sampler",   "law",        "update",      "theta",
      "chain",   "rotation"};
  return keys;
}

KeyValues parse_config_text(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key(trim(view.substr(0, eq)));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(key, "unknown key '" + key + "' on line " + std::to_string(line_no));
    if (kv.contains(key)) throw ConfigError(key, "duplicate key '" + key + "'");
    kv[key] = std::string(trim(view.substr(eq + 1)));
  }
  return kv;
}

std::vector<double> ExperimentConfig::theta_grid() const {
  return linspace(theta_start, theta_stop, theta_count);
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream text;
  if (model) {
    text << "variant = " << ontolab::to_string(model->variant) << '\n'
         << "d = " << model->system_dim << '\n'
         << "D = " << model->ontic_dim << '\n'
         << "delta = " << real_text(model->delta) << '\n';
  } else {
    text << "d = " << system_dim << '\n' << "D = " << ontic_dim << '\n';
  }
  text << "theta_start = " << real_text(theta_start) << '\n'
       << "theta_stop = " << real_text(theta_stop) << '\n'
       << "theta_count = " << theta_count << '\n';
  if (!delta_grid.empty()) text << "delta_grid = " << grid_text(delta_grid) << '\n';
  if (!alpha_grid.empty()) text << "alpha_grid = " << grid_text(alpha_grid) << '\n';
  text << "n_samples = " << n_samples << '\n'
       << "n_contexts = " << n_contexts << '\n'
       << "seed = " << seed << '\n'
       << "workers = " << n_workers << '\n'
       << "sampler = " << ontolab::to_string(sampler) << '\n'
       << "out = " << out << '\n'
       << "law = " << law << '\n'
       << "update = " << update << '\n'
       << "theta = " << real_text(theta) << '\n';
  if (!chain.empty()) text << "chain = " << std::string(chain.begin(), chain.end()) << '\n';
  text << "rotation = " << real_text(rotation) << '\n';
  return text.str();
}

namespace {

std::optional<std::string> pick(const KeyValues& kv, const std::optional<std::string>& override_value,
                                const std::string& key) {
  if (override_value) return override_value;
  if (auto it = kv.find(key); it != kv.end()) return it->second;
  return std::nullopt;
}

std::string model_error_key(const std::string& message) {
  if (message.find("delta") != std::string::npos || message.find("cutoff") != std::string::npos)
    return "delta";
  if (message.find("D =") != std::string::npos || message.find("D=") != std::string::npos)
    return "D";
  if (message.find("d =") != std::string::npos) return "d";
  return "variant";
}

ModelSpec resolve_model(const KeyValues& kv, const std::optional<std::string>& delta_text) {
  const std::string& variant_text = kv.find("variant")->second;
  Variant variant{};
  try {
    variant = parse_variant(variant_text);
  } catch (const InvalidModel& e) {
    throw ConfigError("variant", e.what());
  }
  std::string fragment = "variant = " + std::string(ontolab::to_string(variant)) + "\n";
  if (auto it = kv.find("d"); it != kv.end())
    fragment += "d = " + std::to_string(to_integer<int>("d", it->second, 1)) + "\n";
  if (auto it = kv.find("D"); it != kv.end())
    fragment += "D = " + std::to_string(to_integer<int>("D", it->second, 1)) + "\n";
  try {
    ModelSpec model = from_fragment(fragment);
    // Δ moves along the family, so the ks-qubit model accepts Δ ≠ 1/2.
    if (delta_text) model = model.with_delta(to_real("delta", *delta_text));
    model.validate();
    return model;
  } catch (const InvalidModel& e) {
    throw ConfigError(model_error_key(e.what()), e.what());
  }
}

}  // namespace

ExperimentConfig resolve_config(Experiment experiment, const KeyValues& file_values,
                                const Overrides& overrides,
                                const std::optional<std::string>& env_seed) {
  KeyValues kv = file_values;
  if (overrides.n_samples) kv["n_samples"] = *overrides.n_samples;
  if (overrides.delta) kv["delta"] = *overrides.delta;

  ExperimentConfig config;
  config.experiment = experiment;

  if (auto it = kv.find("law"); it != kv.end()) {
    if (it->second != "haar" && it->second != "epistemic")
      throw ConfigError("law", "invalid value for 'law': expected haar or epistemic, got '" +
                                   it->second + "'");
    config.law = it->second;
  }

  switch (experiment) {
    case Experiment::born_sweep:
      require(kv, "variant", experiment);
      break;
    case Experiment::delta_opt:
      require(kv, "variant", experiment);
      require(kv, "delta_grid", experiment);
      break;
    case Experiment::contextuality:
      require(kv, "n_contexts", experiment);
      if (config.law == "epistemic") require(kv, "variant", experiment);
      break;
    case Experiment::repeatability:
      require(kv, "variant", experiment);
      break;
    case Experiment::sequential:
      require(kv, "variant", experiment);
      require(kv, "chain", experiment);
      break;
    case Experiment::marble_check:
      break;
  }
  require(kv, "n_samples", experiment);

  const auto delta_text = pick(kv, std::nullopt, "delta");
  if (kv.contains("variant")) {
    config.model = resolve_model(kv, delta_text);
  } else {
    if (delta_text) throw ConfigError("delta", "'delta' requires 'variant'");
    if (auto it = kv.find("d"); it != kv.end())
      config.system_dim = to_integer<int>("d", it->second, kMinDim);
    config.ontic_dim = config.system_dim;
    if (auto it = kv.find("D"); it != kv.end())
      config.ontic_dim = to_integer<int>("D", it->second, config.system_dim);
    if (config.system_dim > kMaxDim) throw ConfigError("d", "'d' exceeds the maximum dimension");
    if (config.ontic_dim > kMaxDim) throw ConfigError("D", "'D' exceeds the maximum dimension");
  }
  if (experiment == Experiment::marble_check && config.model &&
      config.model->variant != Variant::marble_world)
    throw ConfigError("variant", "marble-check requires variant = marble-world");

  if (auto it = kv.find("theta_start"); it != kv.end())
    config.theta_start = to_real("theta_start", it->second);
  if (auto it = kv.find("theta_stop"); it != kv.end())
    config.theta_stop = to_real("theta_stop", it->second);
  if (auto it = kv.find("theta_count"); it != kv.end())
    config.theta_count = to_integer<int>("theta_count", it->second, 1);
  if (auto it = kv.find("delta_grid"); it != kv.end())
    config.delta_grid = to_grid("delta_grid", it->second);
  if (auto it = kv.find("alpha_grid"); it != kv.end())
    config.alpha_grid = to_grid("alpha_grid", it->second);
  else if (experiment == Experiment::marble_check)
    config.alpha_grid = {0.0, std::numbers::pi / 8, std::numbers::pi / 4, 3 * std::numbers::pi / 8};

  config.n_samples = to_integer<std::int64_t>("n_samples", kv["n_samples"], 1);
  if (auto it = kv.find("n_contexts"); it != kv.end())
    config.n_contexts = to_integer<int>("n_contexts", it->second, 1);

  if (overrides.seed) {
    config.seed = to_integer<std::uint64_t>("seed", *overrides.seed, 0);
    config.seed_source = SeedSource::flag;
  } else if (auto it = kv.find("seed"); it != kv.end()) {
    config.seed = to_integer<std::uint64_t>("seed", it->second, 0);
    config.seed_source = SeedSource::config;
  } else if (env_seed) {
    config.seed = to_integer<std::uint64_t>("seed", *env_seed, 0);
    config.seed_source = SeedSource::environment;
  }

  if (auto w = pick(kv, overrides.workers, "workers"))
    config.n_workers = to_integer<int>("workers", *w, 1);
  if (auto it = kv.find("sampler"); it != kv.end()) {
    try {
      config.sampler = parse_sampler(it->second);
    } catch (const InvalidModel& e) {
      throw ConfigError("sampler", e.what());
    }
  }
  if (auto o = pick(kv, overrides.out, "out")) {
    if (o->empty()) throw ConfigError("out", "'out' must not be empty");
    config.out = *o;
  } else {
    config.out = std::string(to_string(experiment)) + ".csv";
  }

  if (auto it = kv.find("update"); it != kv.end()) {
    if (it->second != "collapse" && it->second != "bayes" && it->second != "both")
      throw ConfigError("update", "invalid value for 'update': expected collapse, bayes or both");
    config.update = it->second;
  }
  if (auto it = kv.find("theta"); it != kv.end()) config.theta = to_real("theta", it->second);
  if (auto it = kv.find("rotation"); it != kv.end())
    config.rotation = to_real("rotation", it->second);
  if (auto it = kv.find("chain"); it != kv.end()) {
    for (char c : it->second) {
      if (c == ' ' || c == ',') continue;
      if (c != 'A' && c != 'B' && c != 'C')
        throw ConfigError("chain", "invalid value for 'chain': labels must be A, B or C");
      config.chain.push_back(c);
    }
    if (config.chain.empty()) throw ConfigError("chain", "'chain' must name at least one context");
  }
  return config;
}

}  // namespace ontolab::cli
