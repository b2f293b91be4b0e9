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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ontolab_cli/experiments.hpp"

int main(int argc, char** argv) {
  using namespace ontolab::cli;

  CLI::App app{"Monte Carlo simulator for epistemic ontological models"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  Overrides overrides;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--seed", overrides.seed, "master seed (overrides config and ONTOLAB_SEED)");
    sub->add_option("--n-samples", overrides.n_samples, "samples per estimate");
    sub->add_option("--delta", overrides.delta, "model parameter delta");
    sub->add_option("--out", overrides.out, "results CSV path");
    sub->add_option("--workers", overrides.workers, "worker threads");
  };
  for (auto name : experiment_names())
    add_common(app.add_subcommand(std::string(name), "run the " + std::string(name) + " experiment"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  const Experiment experiment = parse_experiment(app.get_subcommands().front()->get_name());
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("ONTOLAB_SEED")) env_seed = s;
  std::optional<std::filesystem::path> path;
  if (config_path) path = *config_path;
  return run(experiment, path, overrides, env_seed, std::cerr);
}
