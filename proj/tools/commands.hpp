#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ssaas::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntimeFailure = 1,
  kExitInvalidInput = 2,
};

int cmd_validate(const std::filesystem::path& config, std::ostream& out,
                 std::ostream& err, bool quiet = false);

struct RunCommand {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
  unsigned jobs = 1;
  bool quiet = false;
};

/// Writes <out_dir>/trace.csv and <out_dir>/summary.csv.
int cmd_run(const RunCommand& cmd, std::ostream& out, std::ostream& err);

struct SweepCommand {
  std::filesystem::path config;
  std::string kind;  // "availability" or "latency"
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
  bool quiet = false;
};

/// Writes <out_dir>/curves.csv.
int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace ssaas::cli
