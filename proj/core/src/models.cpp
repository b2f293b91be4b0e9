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

#include "ontolab/models.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

constexpr double kQuantileTolerance = 1e-12;

bool is_linear(Variant v) { return v == Variant::ks_qubit || v == Variant::linear_trace; }

bool same(double a, double b) { return std::abs(a - b) <= 1e-15; }

double parse_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw InvalidModel("malformed value for '" + std::string(key) + "': " + std::string(text));
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw InvalidModel("malformed value for '" + std::string(key) + "': " + std::string(text));
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ks_qubit: return "ks-qubit";
    case Variant::marble_world: return "marble-world";
    case Variant::linear_trace: return "linear-trace";
    case Variant::uniform_embedded: return "uniform-embedded";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::ks_qubit, Variant::marble_world, Variant::linear_trace,
                    Variant::uniform_embedded})
    if (to_string(v) == name) return v;
  throw InvalidModel("unknown model variant '" + std::string(name) + "'");
}

ModelSpec ModelSpec::ks_qubit() { return make(Variant::ks_qubit, 2, 2, 0.5); }

ModelSpec ModelSpec::marble_world() { return make(Variant::marble_world, 2, 3, kMarbleCutoff); }

ModelSpec ModelSpec::linear_trace(int dim, double delta) {
  return make(Variant::linear_trace, dim, dim, delta);
}

ModelSpec ModelSpec::uniform_embedded(int system_dim, double delta) {
  return make(Variant::uniform_embedded, system_dim, system_dim + 1, delta);
}

ModelSpec ModelSpec::make(Variant variant, int system_dim, int ontic_dim, double delta) {
  ModelSpec m{variant, system_dim, ontic_dim, delta};
  m.validate();
  return m;
}

void ModelSpec::validate() const {
  const std::string name(to_string(variant));
  if (!std::isfinite(delta)) throw InvalidModel(name + ": delta must be finite");
  if (system_dim < kMinDim || ontic_dim > kMaxDim || ontic_dim < system_dim)
    throw InvalidModel(name + ": dimensions d=" + std::to_string(system_dim) +
                       ", D=" + std::to_string(ontic_dim) + " out of range");
  switch (variant) {
    case Variant::ks_qubit:
      if (system_dim != 2 || ontic_dim != 2) throw InvalidModel(name + ": requires d = D = 2");
      if (!same(delta, 0.5)) throw InvalidModel(name + ": delta is fixed at 1/2");
      break;
    case Variant::marble_world:
      if (system_dim != 2 || ontic_dim != 3)
        throw InvalidModel(name + ": requires d = 2 on the real 2-sphere (D = 3)");
      if (!same(delta, kMarbleCutoff)) throw InvalidModel(name + ": support cutoff is fixed at 1/sqrt(2)");
      break;
    case Variant::linear_trace:
      if (ontic_dim != system_dim) throw InvalidModel(name + ": requires d = D");
      if (delta < 0.0 || delta >= 1.0) throw InvalidModel(name + ": delta must lie in [0, 1)");
      break;
    case Variant::uniform_embedded:
      if (ontic_dim != system_dim + 1) throw InvalidModel(name + ": requires D = d + 1");
      if (delta <= 0.0 || delta >= 1.0) throw InvalidModel(name + ": delta must lie in (0, 1)");
      break;
  }
}

ModelSpec ModelSpec::with_delta(double new_delta) const {
  switch (variant) {
    case Variant::ks_qubit:
      return same(new_delta, 0.5) ? ks_qubit() : linear_trace(2, new_delta);
    case Variant::marble_world:
      throw InvalidModel("marble-world: support cutoff is fixed");
    case Variant::linear_trace:
    case Variant::uniform_embedded:
      return make(variant, system_dim, ontic_dim, new_delta);
  }
  return *this;
}

std::string model_id(const ModelSpec& model) {
  return std::string(to_string(model.variant)) + "-d" + std::to_string(model.system_dim) + "-D" +
         std::to_string(model.ontic_dim);
}

std::string to_fragment(const ModelSpec& model) {
  char delta[32];
  std::snprintf(delta, sizeof delta, "%.17g", model.delta);
  std::ostringstream out;
  out << "variant = " << to_string(model.variant) << '\n'
      << "d = " << model.system_dim << '\n'
      << "D = " << model.ontic_dim << '\n'
      << "delta = " << delta << '\n';
  return out.str();
}

ModelSpec from_fragment(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw InvalidModel("expected 'key = value': " + line);
    const std::string key(trim(view.substr(0, eq)));
    if (key != "variant" && key != "d" && key != "D" && key != "delta")
      throw InvalidModel("unknown model key '" + key + "'");
    kv[key] = std::string(trim(view.substr(eq + 1)));
  }
  if (!kv.contains("variant")) throw InvalidModel("missing model key 'variant'");
  const Variant variant = parse_variant(kv["variant"]);

  ModelSpec base;
  switch (variant) {
    case Variant::ks_qubit: base = {variant, 2, 2, 0.5}; break;
    case Variant::marble_world: base = {variant, 2, 3, kMarbleCutoff}; break;
    case Variant::linear_trace: base = {variant, 3, 3, 1.0 / std::sqrt(3.0)}; break;
    case Variant::uniform_embedded: base = {variant, 2, 3, 0.5}; break;
  }
  if (kv.contains("d")) {
    base.system_dim = parse_int("d", kv["d"]);
    if (variant == Variant::linear_trace) base.ontic_dim = base.system_dim;
    if (variant == Variant::uniform_embedded) base.ontic_dim = base.system_dim + 1;
  }
  if (kv.contains("D")) base.ontic_dim = parse_int("D", kv["D"]);
  if (kv.contains("delta")) base.delta = parse_double("delta", kv["delta"]);
  base.validate();
  return base;
}

double weight(const ModelSpec& model, double t) {
  switch (model.variant) {
    case Variant::ks_qubit:
    case Variant::linear_trace:
      return t >= model.delta ? t - model.delta : 0.0;
    case Variant::uniform_embedded:
      return t >= model.delta ? 1.0 : 0.0;
    case Variant::marble_world:
      return t >= kMarbleCutoff ? std::max(2.0 * t * t - 1.0, 0.0) : 0.0;
  }
  return 0.0;
}

double weight_max(const ModelSpec& model) {
  return is_linear(model.variant) ? 1.0 - model.delta : 1.0;
}

double support_lower(const ModelSpec& model) { return model.delta; }

double reference_marginal(const ModelSpec& model, double t) {
  if (model.variant == Variant::marble_world) return (t >= -1.0 && t <= 1.0) ? 0.5 : 0.0;
  if (t < 0.0 || t > 1.0) return 0.0;
  const int big_d = model.ontic_dim;
  return (big_d - 1) * std::pow(1.0 - t, big_d - 2);
}

double normalization(const ModelSpec& model) {
  model.validate();
  const double a = 1.0 - model.delta;
  const int big_d = model.ontic_dim;
  double integral = 0.0;
  switch (model.variant) {
    case Variant::ks_qubit:
    case Variant::linear_trace:
      // ∫_Δ^1 (t-Δ)(D-1)(1-t)^{D-2} dt = (1-Δ)^D / D
      integral = std::pow(a, big_d) / big_d;
      break;
    case Variant::uniform_embedded:
      // ∫_Δ^1 (D-1)(1-t)^{D-2} dt = (1-Δ)^{D-1}
      integral = std::pow(a, big_d - 1);
      break;
    case Variant::marble_world: {
      auto integrand = [&](double t) { return weight(model, t) * reference_marginal(model, t); };
      integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          integrand, support_lower(model), 1.0, 15, 1e-14);
      break;
    }
  }
  if (!(integral > 0.0)) throw EmptySupport();
  return 1.0 / integral;
}

OverlapLaw::OverlapLaw(const ModelSpec& model)
    : model_(model), lower_(support_lower(model)), normalization_(ontolab::normalization(model)) {}

double OverlapLaw::pdf(double t) const {
  if (t < lower_ || t > 1.0) return 0.0;
  return normalization_ * weight(model_, t) * reference_marginal(model_, t);
}

double OverlapLaw::cdf(double t) const {
  if (t <= lower_) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = 1.0 - model_.delta;
  const double u = 1.0 - t;
  const int big_d = model_.ontic_dim;
  double value = 0.0;
  switch (model_.variant) {
    case Variant::ks_qubit:
    case Variant::linear_trace:
      value = normalization_ * (std::pow(a, big_d) / big_d - a * std::pow(u, big_d - 1) +
                                (big_d - 1.0) / big_d * std::pow(u, big_d));
      break;
    case Variant::uniform_embedded:
      value = 1.0 - std::pow(u / a, big_d - 1);
      break;
    case Variant::marble_world: {
      auto g = [](double x) { return 2.0 * x * x * x / 3.0 - x; };
      value = 0.5 * normalization_ * (g(t) - g(lower_));
      break;
    }
  }
  return std::clamp(value, 0.0, 1.0);
}

double OverlapLaw::quantile(double p) const {
  if (p <= 0.0) return lower_;
  if (p >= 1.0) return 1.0;
  const double a = 1.0 - model_.delta;
  const int big_d = model_.ontic_dim;
  if (is_linear(model_.variant) && big_d == 2) return model_.delta + a * std::sqrt(p);
  if (model_.variant == Variant::uniform_embedded)
    return 1.0 - a * std::pow(1.0 - p, 1.0 / (big_d - 1));

  auto f = [&](double t) { return cdf(t) - p; };
  auto tol = [](double lo, double hi) { return hi - lo <= kQuantileTolerance; };
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::bisect(f, lower_, 1.0, tol, max_iter);
  return 0.5 * (lo + hi);
}

EpistemicState::EpistemicState(const ModelSpec& model, PureState center)
    : model_(model), center_(std::move(center)), law_(model) {
  if (model.variant == Variant::marble_world)
    throw InvalidModel("marble-world states live on the real sphere; use MarbleState");
  if (center_.dim() != model.ontic_dim)
    throw DimensionMismatch("epistemic state center", model.ontic_dim, center_.dim());
}

EpistemicState prepare(const ModelSpec& model, const PureState& psi) {
  if (psi.dim() != model.system_dim)
    throw DimensionMismatch("prepared state", model.system_dim, psi.dim());
  return EpistemicState(model, embed(psi, model.ontic_dim));
}

double density_at(const EpistemicState& state, const PureState& lambda) {
  if (lambda.dim() != state.center().dim())
    throw DimensionMismatch("density_at", state.center().dim(), lambda.dim());
  return state.normalization() * weight(state.model(), overlap(lambda, state.center()));
}

std::string_view to_string(Sampler s) {
  return s == Sampler::rejection ? "rejection" : "conditional";
}

Sampler parse_sampler(std::string_view name) {
  if (name == "rejection") return Sampler::rejection;
  if (name == "conditional") return Sampler::conditional;
  throw InvalidModel("unknown sampler '" + std::string(name) + "'");
}

PureState sample_rejection(const EpistemicState& state, RandomStream& rng) {
  const ModelSpec& model = state.model();
  const double wmax = weight_max(model);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (;;) {
    PureState proposal = haar_state(model.ontic_dim, rng);
    const double w = weight(model, overlap(proposal, state.center()));
    if (w > 0.0 && uniform(rng) * wmax < w) return proposal;
  }
}

PureState sample_conditional(const EpistemicState& state, RandomStream& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double p = 0.0;
  do { p = uniform(rng); } while (p == 0.0);
  const double t = state.overlap_law().quantile(p);

  const Amplitudes& c = state.center().amplitudes();
  Amplitudes eta;
  double norm = 0.0;
  do {
    eta = gaussian_amplitudes(state.center().dim(), rng);
    eta -= c.dot(eta) * c;
    norm = eta.norm();
  } while (norm < 1e-12);
  eta /= norm;
  return PureState::from_amplitudes(std::sqrt(t) * c + std::sqrt(1.0 - t) * eta);
}

PureState sample(const EpistemicState& state, RandomStream& rng, Sampler sampler) {
  return sampler == Sampler::rejection ? sample_rejection(state, rng)
                                       : sample_conditional(state, rng);
}

}  // namespace ontolab
