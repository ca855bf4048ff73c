#include "ssaas/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <iterator>
#include <optional>
#include <sstream>

#include "schema.hpp"
#include "ssaas/error.hpp"

namespace ssaas {

using detail::field_path;
using detail::index_path;
using detail::SchemaReader;
using nlohmann::json;

Topology TopologySpec::build(std::size_t node_count) const {
  if (kind == "edges") return Topology::build(node_count, edges, roles);

  Topology generated = [&] {
    if (kind == "complete") return make_complete(node_count);
    if (kind == "ring") return make_ring(node_count);
    if (kind == "star") return make_star(node_count);
    if (kind == "path") return make_path(node_count);
    if (kind == "random-connected")
      return make_random_connected(node_count, edge_probability, seed);
    throw Error(ErrorKind::kInvalidParams, "unknown topology kind '" + kind + "'");
  }();
  if (roles.empty()) return generated;

  std::vector<Edge> list;
  for (NodeId i = 0; i < generated.size(); ++i)
    for (NodeId j : generated.neighbors(i))
      if (i < j) list.push_back({i, j});
  return Topology::build(node_count, list, roles);
}

ScenarioConfig default_scenario(std::size_t node_count) {
  ScenarioConfig c;
  c.deployment.number_of_servers = node_count;
  c.deployment.context = {{"environment", "highway"},
                          {"cloud", "joint RSU and vehicle"}};
  c.sensing = SensingScenario::broadcast(node_count, true);
  return c;
}

std::vector<std::string> check_scenario(const ScenarioConfig& c) {
  SchemaReader r;
  std::vector<std::string> warnings;
  const std::size_t n = c.node_count();

  if (n < 2) r.fail("number_of_servers", "cooperative sensing needs at least 2");
  if (c.repetitions < 1) r.fail("scenario.repetitions", "must be >= 1");

  std::optional<Topology> topology;
  if (n >= 2) {
    try {
      topology = c.topology.build(n);
    } catch (const Error& e) {
      r.fail("scenario.topology", e.what());
    }
  }
  if (topology) {
    try {
      (void)c.deployment.sensing_algorithm.resolve(*topology);
    } catch (const Error& e) {
      r.fail("sensing_algorithm", e.what());
    }
  }
  try {
    c.deployment.trust_algorithm.params.validate();
  } catch (const Error& e) {
    r.fail("trust_algorithm", e.what());
  }

  try {
    c.sensing.validate();
  } catch (const Error& e) {
    r.fail("scenario.sensing", e.what());
  }
  if (c.sensing.node_count() != n)
    r.fail("scenario.sensing", "per-node means must have one entry per server");

  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < c.attackers.size(); ++k) {
    const auto& a = c.attackers[k];
    const std::string path = index_path("scenario.attackers", k);
    if (a.node >= n) {
      r.fail(field_path(path, "node"), "node index out of range");
    } else if (seen[a.node]) {
      r.fail(field_path(path, "node"), "node already listed as attacker");
    } else {
      seen[a.node] = true;
    }
    try {
      a.validate();
    } catch (const Error& e) {
      r.fail(path, e.what());
    }
  }
  if (2 * c.attackers.size() >= n && n > 0) {
    r.fail("scenario.attackers", "attackers must be strictly fewer than half of the nodes");
  } else if (3 * c.attackers.size() > n) {
    warnings.push_back("attacker fraction " + std::to_string(c.attackers.size()) +
                       "/" + std::to_string(n) +
                       " exceeds one third; consensus may fail");
  }

  for (std::size_t k = 0; k < c.availability.grid.size(); ++k) {
    const double p = c.availability.grid[k];
    if (!(p >= 0.0 && p <= 1.0))
      r.fail(index_path("scenario.sweeps.availability.grid", k), "must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < c.latency.vm_counts.size(); ++k)
    if (c.latency.vm_counts[k] < 1)
      r.fail(index_path("scenario.sweeps.latency.vm_counts", k), "must be >= 1");

  r.throw_if_failed();
  return warnings;
}

namespace {

std::vector<double> read_means(SchemaReader& r, const json& obj,
                               std::string_view key, std::string_view parent,
                               std::size_t n, double fallback) {
  const json* v = r.member(obj, key, parent, false);
  if (v == nullptr) return std::vector<double>(n, fallback);
  if (v->is_number()) return std::vector<double>(n, v->get<double>());
  if (v->is_array()) {
    std::vector<double> out;
    for (const auto& e : *v) {
      if (!e.is_number()) {
        r.fail(field_path(parent, key), "expected numbers");
        return std::vector<double>(n, fallback);
      }
      out.push_back(e.get<double>());
    }
    if (out.size() != n)
      r.fail(field_path(parent, key), "expected " + std::to_string(n) + " entries");
    return out;
  }
  r.fail(field_path(parent, key), "expected a number or an array of numbers");
  return std::vector<double>(n, fallback);
}

void read_topology(SchemaReader& r, const json& obj, TopologySpec& spec) {
  const std::string p = "scenario.topology";
  if (!obj.is_object()) {
    r.fail(p, "expected an object");
    return;
  }
  if (auto kind = r.string(obj, "kind", p, true)) spec.kind = *kind;
  static constexpr std::array<std::string_view, 6> kKinds{
      "complete", "ring", "star", "path", "random-connected", "edges"};
  if (std::find(kKinds.begin(), kKinds.end(), spec.kind) == kKinds.end())
    r.fail(field_path(p, "kind"), "unknown topology kind '" + spec.kind + "'");

  if (spec.kind == "edges") {
    const json* edges = r.member(obj, "edges", p, true);
    if (edges != nullptr && !edges->is_array()) {
      r.fail(field_path(p, "edges"), "expected an array of [a, b] pairs");
    } else if (edges != nullptr) {
      for (std::size_t k = 0; k < edges->size(); ++k) {
        const json& e = (*edges)[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned()) {
          r.fail(index_path(field_path(p, "edges"), k),
                 "expected a pair of node indices");
          continue;
        }
        spec.edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
      }
    }
  }
  if (auto prob = r.number(obj, "edge_probability", p, false)) {
    if (*prob < 0.0 || *prob > 1.0)
      r.fail(field_path(p, "edge_probability"), "must lie in [0, 1]");
    spec.edge_probability = *prob;
  }
  if (auto seed = r.count(obj, "seed", p, false)) spec.seed = *seed;
  if (const json* roles = r.member(obj, "roles", p, false)) {
    if (!roles->is_array()) {
      r.fail(field_path(p, "roles"), "expected an array of role names");
    } else {
      for (std::size_t k = 0; k < roles->size(); ++k) {
        const json& role = (*roles)[k];
        if (role.is_string() &&
            (role.get<std::string>() == "vehicle" || role.get<std::string>() == "rsu")) {
          spec.roles.push_back(node_role_from_string(role.get<std::string>()));
        } else {
          r.fail(index_path(field_path(p, "roles"), k),
                 "expected \"vehicle\" or \"rsu\"");
        }
      }
    }
  }
}

std::optional<AttackProfile> read_attacker(SchemaReader& r, const json& obj,
                                           const std::string& p) {
  if (!obj.is_object()) {
    r.fail(p, "expected an object");
    return std::nullopt;
  }
  AttackProfile a;
  const auto node = r.count(obj, "node", p, true);
  const auto strategy = r.string(obj, "strategy", p, true);
  if (!node || !strategy) return std::nullopt;
  a.node = *node;

  if (*strategy == "constant") {
    a.strategy = ConstantAttack{r.number(obj, "value_db", p, true).value_or(0.0)};
  } else if (*strategy == "offset") {
    a.strategy = OffsetAttack{r.number(obj, "offset_db", p, true).value_or(0.0)};
  } else if (*strategy == "random_uniform") {
    UniformAttack u;
    u.lo_db = r.number(obj, "lo_db", p, true).value_or(0.0);
    u.hi_db = r.number(obj, "hi_db", p, true).value_or(0.0);
    a.strategy = u;
  } else if (*strategy == "oscillating") {
    OscillatingAttack o;
    o.base_db = r.number(obj, "base_db", p, true).value_or(0.0);
    o.amplitude_db = r.number(obj, "amplitude_db", p, true).value_or(0.0);
    o.period = r.count(obj, "period", p, true).value_or(1);
    a.strategy = o;
  } else {
    r.fail(field_path(p, "strategy"),
           "expected constant, offset, random_uniform or oscillating");
    return std::nullopt;
  }
  return a;
}

void read_sweeps(SchemaReader& r, const json& obj, ScenarioConfig& c) {
  const std::string p = "scenario.sweeps";
  if (!obj.is_object()) {
    r.fail(p, "expected an object");
    return;
  }
  if (const json* av = r.member(obj, "availability", p, false)) {
    const std::string q = field_path(p, "availability");
    auto& s = c.availability;
    if (const json* grid = r.member(*av, "grid", q, false)) {
      s.grid.clear();
      if (!grid->is_array()) r.fail(field_path(q, "grid"), "expected an array");
      else
        for (std::size_t k = 0; k < grid->size(); ++k) {
          if ((*grid)[k].is_number()) s.grid.push_back((*grid)[k].get<double>());
          else r.fail(index_path(field_path(q, "grid"), k), "expected a number");
        }
    }
    if (auto v = r.count(*av, "trials", q, false)) s.trials = *v;
    if (auto v = r.count(*av, "rounds", q, false)) s.rounds = *v;
    if (auto v = r.count(*av, "n_hosts", q, false)) s.n_hosts = *v;
    if (auto v = r.boolean(*av, "migration", q, false)) s.migration_enabled = *v;
  }
  if (const json* lat = r.member(obj, "latency", p, false)) {
    const std::string q = field_path(p, "latency");
    auto& s = c.latency;
    if (const json* counts = r.member(*lat, "vm_counts", q, false)) {
      s.vm_counts.clear();
      if (!counts->is_array()) r.fail(field_path(q, "vm_counts"), "expected an array");
      else
        for (std::size_t k = 0; k < counts->size(); ++k) {
          if ((*counts)[k].is_number_unsigned())
            s.vm_counts.push_back((*counts)[k].get<std::size_t>());
          else
            r.fail(index_path(field_path(q, "vm_counts"), k),
                   "expected a positive integer");
        }
    }
    if (auto v = r.count(*lat, "rounds", q, false)) s.rounds = *v;
    for (auto* model : {&s.local, &s.conventional}) {
      const std::string key(to_string(model->kind));
      if (const json* m = r.member(*lat, key, q, false)) {
        const std::string mp = field_path(q, key);
        if (auto v = r.number(*m, "trust_fetch_ms", mp, false)) {
          if (*v <= 0.0) r.fail(field_path(mp, "trust_fetch_ms"), "must be > 0");
          model->trust_fetch_ms = *v;
        }
        if (auto v = r.number(*m, "exchange_ms", mp, false)) {
          if (*v <= 0.0) r.fail(field_path(mp, "exchange_ms"), "must be > 0");
          model->exchange_ms = *v;
        }
      }
    }
  }
}

}  // namespace

ScenarioConfig parse_scenario_config(const json& raw) {
  SchemaReader r;
  ScenarioConfig c;
  c.deployment = detail::read_template(raw, r);
  const std::size_t n = c.deployment.number_of_servers;
  c.sensing = SensingScenario::broadcast(n, true);

  const json* sc = raw.is_object() ? r.member(raw, "scenario", "", false) : nullptr;
  if (sc != nullptr && !sc->is_object()) {
    r.fail("scenario", "expected an object");
    sc = nullptr;
  }
  if (sc != nullptr) {
    if (auto v = r.count(*sc, "seed", "scenario", false)) c.seed = *v;
    if (auto v = r.count(*sc, "repetitions", "scenario", false)) c.repetitions = *v;
    if (const json* t = r.member(*sc, "topology", "scenario", false))
      read_topology(r, *t, c.topology);

    if (const json* s = r.member(*sc, "sensing", "scenario", false)) {
      const std::string p = "scenario.sensing";
      if (!s->is_object()) {
        r.fail(p, "expected an object");
      } else {
        if (auto v = r.boolean(*s, "pu_present", p, false)) c.sensing.pu_present = *v;
        c.sensing.energy_mean_present_db =
            read_means(r, *s, "mean_present_db", p, n, 15.0);
        c.sensing.energy_mean_absent_db =
            read_means(r, *s, "mean_absent_db", p, n, 5.0);
        if (auto v = r.number(*s, "noise_std_db", p, false)) {
          if (*v < 0.0) r.fail(field_path(p, "noise_std_db"), "must be >= 0");
          c.sensing.noise_std_db = *v;
        }
      }
    }

    if (const json* list = r.member(*sc, "attackers", "scenario", false)) {
      if (!list->is_array()) {
        r.fail("scenario.attackers", "expected an array");
      } else {
        for (std::size_t k = 0; k < list->size(); ++k)
          if (auto a = read_attacker(r, (*list)[k], index_path("scenario.attackers", k)))
            c.attackers.push_back(std::move(*a));
      }
    }
    if (const json* sw = r.member(*sc, "sweeps", "scenario", false))
      read_sweeps(r, *sw, c);
  }
  r.throw_if_failed();
  (void)check_scenario(c);
  return c;
}

ScenarioConfig parse_scenario_config(std::string_view text) {
  return parse_scenario_config(detail::parse_document(text));
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_config(std::string_view(buffer.str()));
}

namespace {

std::size_t nearest_rank(std::vector<std::size_t> sorted, double q) {
  if (sorted.empty()) return 0;
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

ConsensusRun run_repetition(const ScenarioConfig& c, const Topology& topology,
                            const ConsensusParams& params, std::size_t r) {
  Rng rng(c.seed + r);
  const auto initial = sense_all(c.sensing, rng);
  auto trust = TrustState::init(topology, c.deployment.trust_algorithm.params);
  return run_consensus(topology, initial, std::move(trust), params, c.attackers, rng);
}

}  // namespace

ExperimentReport run_scenario(const ScenarioConfig& config,
                              const RunOptions& options) {
  ExperimentReport report;
  report.warnings = check_scenario(config);
  const Topology topology = config.topology.build(config.node_count());
  const ConsensusParams params =
      config.deployment.sensing_algorithm.resolve(topology);

  const std::size_t reps = config.repetitions;
  std::vector<ConsensusRun> runs(reps);
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs,
                                                        static_cast<unsigned>(reps)));
  if (jobs == 1) {
    for (std::size_t r = 0; r < reps; ++r)
      runs[r] = run_repetition(config, topology, params, r);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t r = w; r < reps; r += jobs)
          runs[r] = run_repetition(config, topology, params, r);
      }));
    }
    for (auto& f : workers) f.get();
  }

  const Decision truth =
      config.sensing.pu_present ? Decision::kPresent : Decision::kAbsent;
  std::size_t correct = 0;
  std::size_t iteration_sum = 0;
  std::vector<std::size_t> iterations;
  for (std::size_t r = 0; r < reps; ++r) {
    const ConsensusRun& run = runs[r];
    report.summaries.push_back({r, run.converged, run.iterations_used,
                                run.decision, truth, run.consensus_value_db});
    if (run.decision == truth) ++correct;
    iteration_sum += run.iterations_used;
    iterations.push_back(run.iterations_used);
  }
  report.accuracy = static_cast<double>(correct) / static_cast<double>(reps);
  report.mean_iterations =
      static_cast<double>(iteration_sum) / static_cast<double>(reps);
  report.median_iterations = nearest_rank(iterations, 0.5);
  report.p90_iterations = nearest_rank(iterations, 0.9);
  if (options.keep_traces) report.runs = std::move(runs);
  return report;
}

ExperimentReport sweep_availability(const ScenarioConfig& config,
                                    std::span<const double> p_av_grid,
                                    std::size_t trials) {
  if (p_av_grid.empty())
    throw Error(ErrorKind::kInvalidParams, "availability grid is empty");
  if (trials < 1) throw Error(ErrorKind::kInvalidParams, "trials must be >= 1");

  ExperimentReport report;
  for (std::size_t g = 0; g < p_av_grid.size(); ++g) {
    AvailabilityModel model;
    model.p_av = p_av_grid[g];
    model.n_nodes = config.node_count();
    model.rounds = config.availability.rounds;
    model.n_hosts = config.availability.n_hosts;
    model.migration_enabled = config.availability.migration_enabled;
    for (SensingMode mode : {SensingMode::kTraditional, SensingMode::kSsaas}) {
      Rng rng(derive_seed(config.seed, 2 * g + (mode == SensingMode::kSsaas)));
      report.availability.push_back(
          {model.p_av, mode, probability_of_success(model, mode, trials, rng),
           analytic_probability_of_success(model, mode)});
    }
  }
  return report;
}

ExperimentReport sweep_latency(const ScenarioConfig& config,
                               std::span<const std::size_t> vm_counts) {
  if (vm_counts.empty())
    throw Error(ErrorKind::kInvalidParams, "VM count list is empty");
  ExperimentReport report;
  for (std::size_t count : vm_counts) {
    for (const LatencyModel* model :
         {&config.latency.local, &config.latency.conventional}) {
      report.latency.push_back(
          {count, model->kind,
           estimate_latency(*model, count, config.latency.rounds)});
    }
  }
  return report;
}

}  // namespace ssaas
