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

#include "ontolab_cli/experiments.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ontolab/errors.hpp"
#include "ontolab/random.hpp"

#ifndef ONTOLAB_VERSION_STRING
#define ONTOLAB_VERSION_STRING "unknown"
#endif

namespace ontolab::cli {
namespace {

EngineOptions engine_options(const ExperimentConfig& c) {
  EngineOptions options;
  options.n_workers = c.n_workers;
  options.sampler = c.sampler;
  return options;
}

std::string real_line(const std::string& name, double v) {
  return name + " = " + format_real(v);
}

CsvRow base_row(const ExperimentConfig& c, std::string experiment, std::int64_t n,
                std::uint64_t seed) {
  CsvRow row;
  row.experiment = std::move(experiment);
  if (c.model) {
    row.model = model_id(*c.model);
    row.delta = c.model->delta;
  } else {
    row.model = "haar-d" + std::to_string(c.system_dim) + "-D" + std::to_string(c.ontic_dim);
  }
  row.n_samples = n;
  row.seed = seed;
  return row;
}

void append_sweep(const ExperimentConfig& c, const std::string& name, const SweepResult& sweep,
                  std::vector<CsvRow>& rows) {
  for (const auto& r : sweep.rows) {
    CsvRow row = base_row(c, name, r.om_estimate.n_samples, c.seed);
    row.model = r.model;
    row.delta = r.delta;
    row.theta = r.theta;
    row.outcome = r.outcome;
    row.qm_prob = r.qm_prob;
    row.om_prob = r.om_estimate.mean;
    row.std_err = r.om_estimate.std_error;
    rows.push_back(std::move(row));
  }
}

ExperimentResult born_sweep(const ExperimentConfig& c) {
  ExperimentResult result;
  const SweepResult sweep =
      deviation_sweep(*c.model, c.theta_grid(), c.n_samples, c.seed, engine_options(c));
  append_sweep(c, "born-sweep", sweep, result.rows);
  result.summary.push_back(real_line("deviation_score", sweep.deviation_score));
  if (!sweep.rows.empty())
    result.summary.push_back(real_line("worst_theta", sweep.rows[sweep.worst_row].theta));
  return result;
}

ExperimentResult delta_opt(const ExperimentConfig& c) {
  ExperimentResult result;
  const DeltaOptimization opt = optimize_delta(*c.model, c.delta_grid, c.theta_grid(),
                                               c.n_samples, c.seed, engine_options(c));
  for (const auto& entry : opt.table) {
    append_sweep(c, "delta-opt", entry.sweep, result.rows);
    result.summary.push_back("score[" + format_real(entry.delta) +
                             "] = " + format_real(entry.sweep.deviation_score));
  }
  result.summary.push_back(real_line("best_delta", opt.best_delta));
  return result;
}

ExperimentResult contextuality(const ExperimentConfig& c) {
  ExperimentResult result;
  const int d = c.model ? c.model->system_dim : c.system_dim;
  const int D = c.model ? c.model->ontic_dim : c.ontic_dim;
  const Context context = Context::computational(d, D);
  SamplingLaw law = HaarLaw{};
  if (c.law == "epistemic") law = prepare(*c.model, basis_state(d, 0));
  const UnfaithfulResult u =
      unfaithful_fraction(context, law, c.n_samples, c.n_contexts, c.seed, engine_options(c));

  CsvRow row = base_row(c, "contextuality", c.n_samples, c.seed);
  if (c.law == "haar") {
    row.model = "haar-d" + std::to_string(d) + "-D" + std::to_string(D);
    row.delta.reset();
  }
  row.outcome = 0;
  row.qm_prob = u.analytic.mean;
  row.om_prob = u.sampled.mean;
  row.std_err = u.sampled.std_error;
  result.rows.push_back(row);
  result.summary.push_back(real_line("unfaithful_sampled", u.sampled.mean));
  result.summary.push_back(real_line("unfaithful_analytic", u.analytic.mean));
  return result;
}

std::vector<UpdateRule> rules_of(const ExperimentConfig& c) {
  if (c.update == "both") return {UpdateRule::collapse, UpdateRule::bayes};
  return {parse_update_rule(c.update)};
}

ExperimentResult repeatability(const ExperimentConfig& c) {
  ExperimentResult result;
  const ModelSpec& model = *c.model;
  const PureState psi = superposition_01(model.system_dim, c.theta);
  const Context context = Context::computational(model.system_dim, model.ontic_dim);
  std::uint64_t index = 0;
  for (UpdateRule rule : rules_of(c)) {
    const std::uint64_t seed = substream_seed(c.seed, index++);
    const Estimate e =
        repeatability_run(model, psi, context, rule, c.n_samples, seed, engine_options(c));
    const std::string name = "repeatability-" + std::string(to_string(rule));
    CsvRow row = base_row(c, name, c.n_samples, c.seed);
    row.theta = c.theta;
    row.qm_prob = 1.0;
    row.om_prob = e.mean;
    row.std_err = e.std_error;
    result.rows.push_back(row);
    result.summary.push_back(real_line(name, e.mean));
  }
  return result;
}

// Real rotation by `angle` in the (a, b) coordinate plane of C^D.
Unitary plane_rotation(int D, int a, int b, double angle) {
  ComplexMatrix m = ComplexMatrix::Identity(D, D);
  m(a, a) = std::cos(angle);
  m(b, b) = std::cos(angle);
  m(a, b) = -std::sin(angle);
  m(b, a) = std::sin(angle);
  return Unitary::from_matrix(m);
}

// A: computational context. B: rotated by `rotation` in the (0, 1) plane.
// C: rotated in the (1, 2) plane when d >= 3, otherwise by twice the angle
// in the (0, 1) plane.
std::vector<Context> chain_contexts(const ExperimentConfig& c) {
  const ModelSpec& model = *c.model;
  const Context a = Context::computational(model.system_dim, model.ontic_dim);
  const Context b = rotate_context(plane_rotation(model.ontic_dim, 0, 1, c.rotation), a);
  const Context cc =
      model.system_dim >= 3
          ? rotate_context(plane_rotation(model.ontic_dim, 1, 2, c.rotation), a)
          : rotate_context(plane_rotation(model.ontic_dim, 0, 1, 2 * c.rotation), a);
  std::vector<Context> contexts;
  for (char label : c.chain) contexts.push_back(label == 'A' ? a : label == 'B' ? b : cc);
  return contexts;
}

ExperimentResult sequential(const ExperimentConfig& c) {
  ExperimentResult result;
  const ModelSpec& model = *c.model;
  const PureState psi = superposition_01(model.system_dim, c.theta);
  const std::vector<Context> contexts = chain_contexts(c);
  std::uint64_t index = 0;
  for (UpdateRule rule : rules_of(c)) {
    const std::uint64_t seed = substream_seed(c.seed, index++);
    const SequentialResult seq =
        sequential_run(model, psi, contexts, rule, c.n_samples, seed, engine_options(c));
    const std::string prefix = "sequential-" + std::string(to_string(rule)) + "-step";
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
      const SequentialStep& step = seq.steps[k];
      const std::string name = prefix + std::to_string(k);
      for (std::size_t i = 0; i < step.outcome_freq.size(); ++i) {
        CsvRow row = base_row(c, name, c.n_samples, c.seed);
        row.theta = c.theta;
        row.outcome = static_cast<int>(i);
        row.qm_prob = step.qm_prob[i];
        row.om_prob = step.outcome_freq[i].mean;
        row.std_err = step.outcome_freq[i].std_error;
        result.rows.push_back(row);
      }
      if (k == 0) continue;
      CsvRow agree = base_row(c, name + "-agree", c.n_samples, c.seed);
      agree.theta = c.theta;
      agree.qm_prob = step.qm_agreement_with_first;
      agree.om_prob = step.agreement_with_first.mean;
      agree.std_err = step.agreement_with_first.std_error;
      result.rows.push_back(agree);
    }
  }
  result.summary.push_back("chain = " + std::string(c.chain.begin(), c.chain.end()));
  return result;
}

ExperimentResult marble_check(const ExperimentConfig& c) {
  ExperimentResult result;
  const ModelSpec marble = ModelSpec::marble_world();
  const RealSphereState north = RealSphereState::from_angles(0.0, 0.0);
  for (std::size_t j = 0; j < c.alpha_grid.size(); ++j) {
    const double alpha = c.alpha_grid[j];
    const RealSphereState m = RealSphereState::from_angles(alpha, 0.0);
    const Estimate green =
        marble_green_probability(north, m, c.n_samples, substream_seed(c.seed, j),
                                 engine_options(c));
    const double qm_green = std::cos(alpha) * std::cos(alpha);
    for (int outcome : {0, 1}) {
      CsvRow row = base_row(c, "marble-check", c.n_samples, c.seed);
      row.model = model_id(marble);
      row.delta = marble.delta;
      row.theta = alpha;
      row.outcome = outcome;
      row.qm_prob = outcome == 0 ? qm_green : 1.0 - qm_green;
      row.om_prob = outcome == 0 ? green.mean : 1.0 - green.mean;
      row.std_err = green.std_error;
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string version_string() { return "ontolab " ONTOLAB_VERSION_STRING; }

ExperimentResult compute(const ExperimentConfig& config) {
  switch (config.experiment) {
    case Experiment::born_sweep: return born_sweep(config);
    case Experiment::delta_opt: return delta_opt(config);
    case Experiment::contextuality: return contextuality(config);
    case Experiment::repeatability: return repeatability(config);
    case Experiment::sequential: return sequential(config);
    case Experiment::marble_check: return marble_check(config);
  }
  return {};
}

std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension();
  p += ".manifest.txt";
  return p;
}

std::string manifest_text(const ExperimentConfig& config, const ExperimentResult& result,
                          double wall_seconds, const std::string& timestamp) {
  std::ostringstream out;
  out << "# experiment: " << to_string(config.experiment) << '\n'
      << "# version: " << version_string() << '\n'
      << "# seed_source: " << to_string(config.seed_source) << '\n'
      << config.to_text();
  for (const auto& line : result.summary) out << "# result: " << line << '\n';
  out << "# rows: " << result.rows.size() << '\n'
      << "# wall_seconds: " << format_real(wall_seconds) << '\n'
      << "# timestamp: " << timestamp << '\n';
  return out.str();
}

int run(Experiment experiment, const std::optional<std::filesystem::path>& config_path,
        const Overrides& overrides, const std::optional<std::string>& env_seed,
        std::ostream& err) {
  ExperimentConfig config;
  try {
    KeyValues values;
    if (config_path) {
      std::ifstream in(*config_path);
      if (!in) throw ConfigError("config", "cannot read config file '" + config_path->string() + "'");
      std::ostringstream text;
      text << in.rdbuf();
      values = parse_config_text(text.str());
    }
    config = resolve_config(experiment, values, overrides, env_seed);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  try {
    result = compute(config);
  } catch (const ontolab::Error& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::filesystem::path csv_path = config.out;
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) {
    err << "config error: cannot write 'out' path '" << config.out << "'\n";
    return kExitConfigError;
  }
  write_csv(csv, result.rows);
  std::ofstream manifest(manifest_path(csv_path), std::ios::binary);
  manifest << manifest_text(config, result, wall, utc_timestamp());
  if (!csv || !manifest) {
    err << "runtime error: failed writing outputs\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace ontolab::cli
