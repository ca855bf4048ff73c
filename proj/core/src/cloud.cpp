#include "ssaas/cloud.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "schema.hpp"
#include "ssaas/error.hpp"

namespace ssaas {

namespace {

constexpr std::array<std::string_view, 1> kSensingAlgorithms{
    kConsensusTrustAlgorithm};
constexpr std::array<std::string_view, 2> kTrustAlgorithms{kDeviationTrust,
                                                           kFixedTrust};

template <std::size_t N>
bool registered(const std::array<std::string_view, N>& names,
                const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

ConsensusParams SensingAlgorithmSpec::resolve(const Topology& topology) const {
  ConsensusParams p = ConsensusParams::defaults_for(topology);
  if (epsilon) p.epsilon = *epsilon;
  p.tolerance_db = tolerance_db;
  p.max_iterations = max_iterations;
  p.threshold_db = threshold_db;
  p.validate(topology);
  return p;
}

std::span<const std::string_view> registered_sensing_algorithms() {
  return kSensingAlgorithms;
}

std::span<const std::string_view> registered_trust_algorithms() {
  return kTrustAlgorithms;
}

namespace detail {

DeploymentTemplate read_template(const json& raw, SchemaReader& r) {
  DeploymentTemplate t;
  if (!raw.is_object()) {
    r.fail("(root)", "expected a JSON object");
    return t;
  }

  if (auto n = r.count(raw, "number_of_servers", "", true)) {
    if (*n < 2)
      r.fail("number_of_servers", "cooperative sensing needs at least 2");
    t.number_of_servers = *n;
  }

  if (const json* ctx = r.member(raw, "context", "", true)) {
    if (!ctx->is_object())
      r.fail("context", "expected an object of key/value pairs");
    else
      t.context = *ctx;
  }

  if (const json* s = r.member(raw, "sensing_algorithm", "", true)) {
    const std::string p = "sensing_algorithm";
    if (!s->is_object()) {
      r.fail(p, "expected an object");
    } else {
      auto& spec = t.sensing_algorithm;
      if (auto name = r.string(*s, "name", p, true)) {
        if (!registered(kSensingAlgorithms, *name))
          r.fail(field_path(p, "name"), "unregistered algorithm '" + *name + "'");
        spec.name = *name;
      }
      if (auto eps = r.number(*s, "epsilon", p, false)) {
        if (*eps <= 0.0) r.fail(field_path(p, "epsilon"), "must be > 0");
        spec.epsilon = *eps;
      }
      if (auto tol = r.number(*s, "tolerance_db", p, false)) {
        if (*tol <= 0.0) r.fail(field_path(p, "tolerance_db"), "must be > 0");
        spec.tolerance_db = *tol;
      }
      if (auto it = r.count(*s, "max_iterations", p, false)) {
        if (*it < 1) r.fail(field_path(p, "max_iterations"), "must be >= 1");
        spec.max_iterations = *it;
      }
      if (auto th = r.number(*s, "threshold_db", p, false))
        spec.threshold_db = *th;
    }
  }

  if (const json* s = r.member(raw, "trust_algorithm", "", true)) {
    const std::string p = "trust_algorithm";
    if (!s->is_object()) {
      r.fail(p, "expected an object");
    } else {
      auto& spec = t.trust_algorithm;
      if (auto name = r.string(*s, "name", p, true)) {
        if (!registered(kTrustAlgorithms, *name))
          r.fail(field_path(p, "name"), "unregistered algorithm '" + *name + "'");
        spec.name = *name;
        spec.params.adaptive = (*name != kFixedTrust);
      }
      if (auto v = r.number(*s, "initial_trust", p, false)) {
        if (*v < 0.0 || *v > 1.0)
          r.fail(field_path(p, "initial_trust"), "must lie in [0, 1]");
        spec.params.initial_trust = *v;
      }
      if (auto v = r.number(*s, "learning_rate", p, false)) {
        if (*v <= 0.0) r.fail(field_path(p, "learning_rate"), "must be > 0");
        spec.params.learning_rate = *v;
      }
      if (auto v = r.number(*s, "deviation_tolerance_db", p, false)) {
        if (*v <= 0.0)
          r.fail(field_path(p, "deviation_tolerance_db"), "must be > 0");
        spec.params.deviation_tolerance_db = *v;
      }
    }
  }
  return t;
}

}  // namespace detail

DeploymentTemplate validate_template(const nlohmann::json& raw) {
  detail::SchemaReader reader;
  DeploymentTemplate t = detail::read_template(raw, reader);
  reader.throw_if_failed();
  return t;
}

DeploymentTemplate parse_template(std::string_view text) {
  return validate_template(detail::parse_document(text));
}

nlohmann::json to_json(const DeploymentTemplate& tmpl) {
  nlohmann::json sensing = {
      {"name", tmpl.sensing_algorithm.name},
      {"tolerance_db", tmpl.sensing_algorithm.tolerance_db},
      {"max_iterations", tmpl.sensing_algorithm.max_iterations},
      {"threshold_db", tmpl.sensing_algorithm.threshold_db},
  };
  if (tmpl.sensing_algorithm.epsilon)
    sensing["epsilon"] = *tmpl.sensing_algorithm.epsilon;
  const auto& tp = tmpl.trust_algorithm.params;
  return {
      {"number_of_servers", tmpl.number_of_servers},
      {"context", tmpl.context},
      {"sensing_algorithm", std::move(sensing)},
      {"trust_algorithm",
       {{"name", tmpl.trust_algorithm.name},
        {"initial_trust", tp.initial_trust},
        {"learning_rate", tp.learning_rate},
        {"deviation_tolerance_db", tp.deviation_tolerance_db}}},
  };
}

std::string_view to_string(SensingMode mode) {
  return mode == SensingMode::kSsaas ? "ssaas" : "traditional";
}

void AvailabilityModel::validate() const {
  if (!(p_av >= 0.0 && p_av <= 1.0))
    throw Error(ErrorKind::kInvalidParams, "p_av must lie in [0, 1]");
  if (n_nodes < 1) throw Error(ErrorKind::kInvalidParams, "n_nodes must be >= 1");
  if (rounds < 1) throw Error(ErrorKind::kInvalidParams, "rounds must be >= 1");
  if (n_hosts < 1) throw Error(ErrorKind::kInvalidParams, "n_hosts must be >= 1");
}

namespace {

std::size_t candidate_hosts(const AvailabilityModel& m, SensingMode mode) {
  return mode == SensingMode::kSsaas && m.migration_enabled ? m.n_hosts : 1;
}

}  // namespace

double probability_of_success(const AvailabilityModel& model, SensingMode mode,
                              std::size_t trials, Rng& rng) {
  model.validate();
  if (trials < 1) throw Error(ErrorKind::kInvalidParams, "trials must be >= 1");

  const std::size_t hosts = candidate_hosts(model, mode);
  std::size_t successes = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    bool ok = true;
    for (std::size_t round = 0; ok && round < model.rounds; ++round) {
      for (std::size_t vm = 0; ok && vm < model.n_nodes; ++vm) {
        bool placed = false;
        for (std::size_t h = 0; !placed && h < hosts; ++h)
          placed = rng.bernoulli(model.p_av);
        ok = placed;
      }
    }
    if (ok) ++successes;
  }
  return static_cast<double>(successes) / static_cast<double>(trials);
}

double analytic_probability_of_success(const AvailabilityModel& model,
                                       SensingMode mode) {
  model.validate();
  const double per_round_vm =
      1.0 - std::pow(1.0 - model.p_av,
                     static_cast<double>(candidate_hosts(model, mode)));
  return std::pow(per_round_vm,
                  static_cast<double>(model.n_nodes * model.rounds));
}

std::string_view to_string(CloudKind kind) {
  return kind == CloudKind::kConventional ? "conventional" : "local";
}

LatencyModel LatencyModel::defaults(CloudKind kind) {
  if (kind == CloudKind::kConventional) return {40.0, 20.0, kind};
  return {10.0, 20.0, kind};
}

void LatencyModel::validate() const {
  if (!(trust_fetch_ms > 0.0) || !std::isfinite(trust_fetch_ms))
    throw Error(ErrorKind::kInvalidParams, "trust_fetch_ms must be > 0");
  if (!(exchange_ms > 0.0) || !std::isfinite(exchange_ms))
    throw Error(ErrorKind::kInvalidParams, "exchange_ms must be > 0");
}

double estimate_latency(const LatencyModel& model, std::size_t n_vms,
                        std::size_t rounds) {
  model.validate();
  if (n_vms < 1) throw Error(ErrorKind::kInvalidParams, "n_vms must be >= 1");
  if (rounds < 1) throw Error(ErrorKind::kInvalidParams, "rounds must be >= 1");
  return static_cast<double>(rounds) * static_cast<double>(n_vms) *
         (model.trust_fetch_ms + model.exchange_ms);
}

}  // namespace ssaas
