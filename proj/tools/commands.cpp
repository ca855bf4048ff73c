#include "commands.hpp"

#include <fstream>
#include <functional>

#include "ssaas/error.hpp"
#include "ssaas/report_csv.hpp"
#include "ssaas/scenario.hpp"

namespace ssaas::cli {

namespace {

namespace fs = std::filesystem;

void report_error(const Error& e, std::ostream& err) {
  if (e.kind() == ErrorKind::kSchemaViolation) {
    for (const auto& v : e.violations())
      err << "error: " << v.field << ": " << v.reason << '\n';
  } else {
    err << "error: " << e.what() << '\n';
  }
}

// Runs body, translating failures into exit codes: ssaas::Error means the
// input was rejected, anything else is a runtime failure.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    report_error(e, err);
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
}

void write_file(const fs::path& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

}  // namespace

int cmd_validate(const fs::path& config, std::ostream& out, std::ostream& err,
                 bool quiet) {
  return guarded(err, [&] {
    const ScenarioConfig c = load_scenario_config(config);
    const auto warnings = check_scenario(c);
    if (!quiet) {
      for (const auto& w : warnings) err << "warning: " << w << '\n';
      out << "valid: " << config.string() << " (" << c.node_count()
          << " servers, " << c.deployment.sensing_algorithm.name << ", "
          << c.deployment.trust_algorithm.name << " trust)\n";
    }
    return kExitOk;
  });
}

int cmd_run(const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioConfig c = load_scenario_config(cmd.config);
    if (cmd.seed) c.seed = *cmd.seed;
    const ExperimentReport report = run_scenario(c, {.jobs = cmd.jobs});
    if (!cmd.quiet)
      for (const auto& w : report.warnings) err << "warning: " << w << '\n';

    prepare_out_dir(cmd.out_dir);
    write_file(cmd.out_dir / "trace.csv",
               [&](std::ostream& os) { write_trace_csv(os, report); });
    write_file(cmd.out_dir / "summary.csv",
               [&](std::ostream& os) { write_summary_csv(os, report); });
    if (!cmd.quiet) {
      out << "runs: " << report.summaries.size()
          << "  accuracy: " << format_number(report.accuracy)
          << "  mean iterations: " << format_number(report.mean_iterations)
          << "  p90 iterations: " << report.p90_iterations << '\n';
    }
    return kExitOk;
  });
}

int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioConfig c = load_scenario_config(cmd.config);
    if (cmd.seed) c.seed = *cmd.seed;

    ExperimentReport report;
    std::function<void(std::ostream&)> writer;
    if (cmd.kind == "availability") {
      report = sweep_availability(c, c.availability.grid, c.availability.trials);
      writer = [&](std::ostream& os) { write_availability_csv(os, report); };
    } else if (cmd.kind == "latency") {
      report = sweep_latency(c, c.latency.vm_counts);
      writer = [&](std::ostream& os) { write_latency_csv(os, report); };
    } else {
      throw Error(ErrorKind::kInvalidParams,
                  "sweep kind must be availability or latency, got '" + cmd.kind + "'");
    }

    prepare_out_dir(cmd.out_dir);
    write_file(cmd.out_dir / "curves.csv", writer);
    if (!cmd.quiet) {
      out << "wrote " << (cmd.out_dir / "curves.csv").string() << " ("
          << report.availability.size() + report.latency.size() << " rows)\n";
    }
    return kExitOk;
  });
}

}  // namespace ssaas::cli
