// ssaas: validate deployment templates, run sensing scenarios, and sweep the
// availability and latency models.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ssaas::cli;

  CLI::App app{"Trust-weighted consensus spectrum sensing simulator"};
  app.require_subcommand(1);

  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::string kind;
  unsigned jobs = 1;
  bool quiet = false;

  auto* validate = app.add_subcommand("validate", "Check a template or scenario file");
  validate->add_option("--config,config", config, "JSON template or scenario")
      ->required();
  validate->add_flag("--quiet", quiet, "Only report errors");

  auto* run = app.add_subcommand("run", "Run a scenario; writes trace.csv and summary.csv");
  run->add_option("--config", config, "JSON scenario")->required();
  run->add_option("--seed", seed, "Override scenario.seed");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run->add_flag("--quiet", quiet, "Suppress progress and warnings");

  auto* sweep = app.add_subcommand("sweep", "Sweep availability or latency; writes curves.csv");
  sweep->add_option("--config", config, "JSON scenario")->required();
  sweep->add_option("--kind", kind, "availability or latency")
      ->required()
      ->check(CLI::IsMember({"availability", "latency"}));
  sweep->add_option("--seed", seed, "Override scenario.seed");
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_flag("--quiet", quiet, "Suppress progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  if (*validate) return cmd_validate(config, std::cout, std::cerr, quiet);
  if (*run) {
    return cmd_run({config, seed, out_dir, jobs, quiet}, std::cout, std::cerr);
  }
  return cmd_sweep({config, kind, seed, out_dir, quiet}, std::cout, std::cerr);
}
