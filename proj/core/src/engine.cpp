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

#include "ontolab/engine.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

using Tally = std::vector<std::int64_t>;
using BatchFn = std::function<void(RandomStream&, std::int64_t count, Tally&)>;

void check_run(std::int64_t n, const EngineOptions& options) {
  if (n < 1) throw Error("sample count must be at least 1");
  if (options.n_workers < 1) throw Error("worker count must be at least 1");
  if (options.batch_size < 1) throw Error("batch size must be at least 1");
}

// Runs ceil(n / batch_size) batches, batch k on make_stream(seed, k), and sums
// the per-batch tallies.
Tally run_batches(std::int64_t n, std::uint64_t seed, const EngineOptions& options,
                  std::size_t width, const BatchFn& fn) {
  check_run(n, options);
  const std::int64_t batch = options.batch_size;
  const std::int64_t n_batches = (n + batch - 1) / batch;
  std::vector<Tally> tallies(static_cast<std::size_t>(n_batches), Tally(width, 0));

  auto work = [&](std::int64_t first, std::int64_t stride) {
    for (std::int64_t k = first; k < n_batches; k += stride) {
      RandomStream rng = make_stream(seed, static_cast<std::uint64_t>(k));
      const std::int64_t count = std::min(batch, n - k * batch);
      fn(rng, count, tallies[static_cast<std::size_t>(k)]);
    }
  };

  const auto workers = std::min<std::int64_t>(options.n_workers, n_batches);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> threads;
      for (std::int64_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            work(w, workers);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Tally total(width, 0);
  for (const auto& t : tallies)
    for (std::size_t i = 0; i < width; ++i) total[i] += t[i];
  return total;
}

void check_model_context(const ModelSpec& model, const PureState& psi, const Context& context) {
  if (model.variant == Variant::marble_world)
    throw InvalidModel("marble-world has no complex ontic space; use marble_green_probability");
  if (psi.dim() != model.system_dim)
    throw DimensionMismatch("prepared state", model.system_dim, psi.dim());
  if (context.ontic_dim() != model.ontic_dim)
    throw DimensionMismatch("context", model.ontic_dim, context.ontic_dim());
}

}  // namespace

Estimate Estimate::from_count(std::int64_t successes, std::int64_t n, std::uint64_t seed,
                              int n_workers) {
  Estimate e;
  e.n_samples = n;
  e.seed = seed;
  e.n_workers = n_workers;
  e.mean = static_cast<double>(successes) / static_cast<double>(n);
  const double p = (successes == 0 || successes == n) ? 0.5 : e.mean;
  e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return e;
}

std::vector<double> born_probs(const PureState& psi, const Context& context) {
  if (psi.dim() > context.ontic_dim())
    throw DimensionMismatch("born_probs", context.ontic_dim(), psi.dim());
  const PureState embedded = embed(psi, context.ontic_dim());
  std::vector<double> probs;
  for (const auto& e : context.elements()) probs.push_back(overlap(embedded, e));
  return probs;
}

std::vector<Estimate> estimate_outcome_probs(const ModelSpec& model, const PureState& psi,
                                             const Context& context, std::int64_t n,
                                             std::uint64_t seed, const EngineOptions& options) {
  check_model_context(model, psi, context);
  const EpistemicState state = prepare(model, psi);
  const auto width = static_cast<std::size_t>(context.system_dim());
  const Tally counts = run_batches(n, seed, options, width,
                                   [&](RandomStream& rng, std::int64_t count, Tally& tally) {
    for (std::int64_t s = 0; s < count; ++s)
      ++tally[static_cast<std::size_t>(outcome_of(sample(state, rng, options.sampler), context))];
  });
  std::vector<Estimate> out;
  for (std::int64_t c : counts) out.push_back(Estimate::from_count(c, n, seed, options.n_workers));
  return out;
}

PureState superposition_01(int dim, double theta) {
  Amplitudes v = Amplitudes::Zero(dim);
  v[0] = std::cos(theta);
  v[1] = std::sin(theta);
  return PureState::from_amplitudes(v);
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw Error("grid needs at least one point");
  std::vector<double> grid;
  for (int j = 0; j < count; ++j)
    grid.push_back(count == 1 ? start : start + (stop - start) * j / (count - 1));
  return grid;
}

double SweepRow::deviation() const { return std::abs(om_estimate.mean - qm_prob); }

SweepResult deviation_sweep(const ModelSpec& model, const std::vector<double>& theta_grid,
                            std::int64_t n, std::uint64_t seed, const EngineOptions& options) {
  if (theta_grid.empty()) throw Error("theta grid is empty");
  const Context context = Context::computational(model.system_dim, model.ontic_dim);
  SweepResult result;
  for (std::size_t j = 0; j < theta_grid.size(); ++j) {
    const double theta = theta_grid[j];
    const PureState psi = superposition_01(model.system_dim, theta);
    const auto qm = born_probs(psi, context);
    const auto om = estimate_outcome_probs(model, psi, context, n, substream_seed(seed, j), options);
    for (std::size_t i = 0; i < qm.size(); ++i) {
      SweepRow row{theta, static_cast<int>(i), qm[i], om[i], model.delta, model_id(model)};
      row.om_estimate.seed = seed;
      if (result.rows.empty() || row.deviation() > result.deviation_score) {
        result.deviation_score = row.deviation();
        result.worst_row = result.rows.size();
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

DeltaOptimization optimize_delta(const ModelSpec& family, const std::vector<double>& delta_grid,
                                 const std::vector<double>& theta_grid, std::int64_t n,
                                 std::uint64_t seed, const EngineOptions& options) {
  if (delta_grid.empty()) throw Error("delta grid is empty");
  DeltaOptimization opt;
  std::optional<std::size_t> best;
  for (double delta : delta_grid) {
    const ModelSpec model = family.with_delta(delta);
    opt.table.push_back({delta, model, deviation_sweep(model, theta_grid, n, seed, options)});
    const auto& entry = opt.table.back();
    if (!best) {
      best = 0;
      continue;
    }
    const auto& incumbent = opt.table[*best];
    const double score = entry.sweep.deviation_score;
    const double best_score = incumbent.sweep.deviation_score;
    if (score < best_score || (score == best_score && delta < incumbent.delta))
      best = opt.table.size() - 1;
  }
  opt.best_delta = opt.table[*best].delta;
  return opt;
}

UnfaithfulResult unfaithful_fraction(const Context& context, const SamplingLaw& law,
                                     std::int64_t n, int n_contexts, std::uint64_t seed,
                                     const EngineOptions& options) {
  if (n_contexts < 1) throw Error("n_contexts must be at least 1");
  if (const auto* state = std::get_if<EpistemicState>(&law))
    if (state->center().dim() != context.ontic_dim())
      throw DimensionMismatch("unfaithful_fraction", context.ontic_dim(), state->center().dim());

  const PureState& lambda0 = context[0];
  const int ontic_dim = context.ontic_dim();
  const Tally counts = run_batches(n, seed, options, 2,
                                   [&](RandomStream& rng, std::int64_t count, Tally& tally) {
    for (std::int64_t s = 0; s < count; ++s) {
      const PureState lambda = std::holds_alternative<HaarLaw>(law)
                                   ? haar_state(ontic_dim, rng)
                                   : sample(std::get<EpistemicState>(law), rng, options.sampler);
      if (outcome_of(lambda, context) != 0) continue;
      if (overlap(lambda, lambda0) <= 0.5) ++tally[1];
      if (!faithful_sampled(lambda, context, n_contexts, rng)) ++tally[0];
    }
  });
  return {Estimate::from_count(counts[0], n, seed, options.n_workers),
          Estimate::from_count(counts[1], n, seed, options.n_workers)};
}

std::string_view to_string(UpdateRule rule) {
  return rule == UpdateRule::collapse ? "collapse" : "bayes";
}

UpdateRule parse_update_rule(std::string_view name) {
  if (name == "collapse") return UpdateRule::collapse;
  if (name == "bayes") return UpdateRule::bayes;
  throw Error("unknown update rule '" + std::string(name) + "'");
}

Estimate repeatability_run(const ModelSpec& model, const PureState& psi, const Context& context,
                           UpdateRule update, std::int64_t n, std::uint64_t seed,
                           const EngineOptions& options) {
  check_model_context(model, psi, context);
  const EpistemicState state = prepare(model, psi);
  const auto d = static_cast<std::size_t>(context.system_dim());
  const Tally counts = run_batches(n, seed, options, 1,
                                   [&](RandomStream& rng, std::int64_t count, Tally& tally) {
    std::vector<std::optional<EpistemicState>> collapsed(d);
    std::vector<std::optional<Posterior>> posteriors(d);
    for (std::int64_t s = 0; s < count; ++s) {
      const int first = outcome_of(sample(state, rng, options.sampler), context);
      const auto i = static_cast<std::size_t>(first);
      PureState next = [&] {
        if (update == UpdateRule::collapse) {
          if (!collapsed[i]) collapsed[i] = collapse_update(model, context, first);
          return sample(*collapsed[i], rng, options.sampler);
        }
        if (!posteriors[i]) posteriors[i] = bayes_update(state, context, first, rng);
        return posteriors[i]->sample(rng, options.sampler);
      }();
      if (outcome_of(next, context) == first) ++tally[0];
    }
  });
  return Estimate::from_count(counts[0], n, seed, options.n_workers);
}

SequentialResult sequential_run(const ModelSpec& model, const PureState& psi,
                                const std::vector<Context>& contexts, UpdateRule update,
                                std::int64_t n, std::uint64_t seed, const EngineOptions& options) {
  if (contexts.empty()) throw Error("measurement chain is empty");
  for (const auto& c : contexts) check_model_context(model, psi, c);
  const EpistemicState state = prepare(model, psi);
  const std::size_t steps = contexts.size();

  // Tally layout: per step, outcome counts then one agreement count.
  std::vector<std::size_t> offset(steps + 1, 0);
  for (std::size_t k = 0; k < steps; ++k)
    offset[k + 1] = offset[k] + static_cast<std::size_t>(contexts[k].system_dim()) + 1;

  const Tally counts = run_batches(n, seed, options, offset[steps],
                                   [&](RandomStream& rng, std::int64_t count, Tally& tally) {
    for (std::int64_t s = 0; s < count; ++s) {
      PureState lambda = sample(state, rng, options.sampler);
      int first = -1;
      for (std::size_t k = 0; k < steps; ++k) {
        if (k > 0 && update == UpdateRule::collapse) {
          const int prev = outcome_of(lambda, contexts[k - 1]);
          lambda = sample(collapse_update(model, contexts[k - 1], prev), rng, options.sampler);
        }
        const int o = outcome_of(lambda, contexts[k]);
        if (k == 0) first = o;
        ++tally[offset[k] + static_cast<std::size_t>(o)];
        if (o == first) ++tally[offset[k + 1] - 1];
      }
    }
  });

  // QM: joint law of (first outcome, current outcome) under Lüders updates.
  const PureState embedded = embed(psi, model.ontic_dim);
  const auto d0 = static_cast<std::size_t>(contexts[0].system_dim());
  std::vector<std::vector<double>> joint(d0);
  for (std::size_t o = 0; o < d0; ++o) {
    joint[o].assign(d0, 0.0);
    joint[o][o] = overlap(embedded, contexts[0][static_cast<int>(o)]);
  }

  SequentialResult result;
  for (std::size_t k = 0; k < steps; ++k) {
    const Context& c = contexts[k];
    const auto dk = static_cast<std::size_t>(c.system_dim());
    if (k > 0) {
      const Context& prev = contexts[k - 1];
      std::vector<std::vector<double>> next(d0, std::vector<double>(dk, 0.0));
      for (std::size_t o = 0; o < d0; ++o)
        for (std::size_t i = 0; i < joint[o].size(); ++i)
          for (std::size_t j = 0; j < dk; ++j)
            next[o][j] += joint[o][i] * overlap(prev[static_cast<int>(i)], c[static_cast<int>(j)]);
      joint = std::move(next);
    }
    SequentialStep step;
    for (std::size_t j = 0; j < dk; ++j) {
      double marginal = 0.0;
      for (std::size_t o = 0; o < d0; ++o) marginal += joint[o][j];
      step.qm_prob.push_back(marginal);
      step.outcome_freq.push_back(
          Estimate::from_count(counts[offset[k] + j], n, seed, options.n_workers));
    }
    for (std::size_t o = 0; o < std::min(d0, dk); ++o) step.qm_agreement_with_first += joint[o][o];
    step.agreement_with_first =
        Estimate::from_count(counts[offset[k + 1] - 1], n, seed, options.n_workers);
    result.steps.push_back(std::move(step));
  }
  return result;
}

Estimate marble_green_probability(const RealSphereState& n, const RealSphereState& m,
                                  std::int64_t samples, std::uint64_t seed,
                                  const EngineOptions& options) {
  const MarbleState state(n);
  const Tally counts = run_batches(samples, seed, options, 1,
                                   [&](RandomStream& rng, std::int64_t count, Tally& tally) {
    for (std::int64_t s = 0; s < count; ++s)
      if (marble_outcome(sample(state, rng, options.sampler), m) == MarbleColor::green) ++tally[0];
  });
  return Estimate::from_count(counts[0], samples, seed, options.n_workers);
}

}  // namespace ontolab
