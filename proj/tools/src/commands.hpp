#pragma once
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace cdlab::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kConfigError = 2, kRuntimeError = 3 };

struct GlobalOptions {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

// Each command validates its config, writes its outputs under out_dir and returns an exit code.
// Configuration problems throw Error(ConfigInvalid | UnknownSuite | BudgetExceeded).
int cmd_simulate(json config, const GlobalOptions& g, std::ostream& log);
int cmd_spectrum(json config, const GlobalOptions& g, std::ostream& log);
int cmd_lie(json config, const GlobalOptions& g, std::ostream& log);
int cmd_verify(const std::string& suite, const GlobalOptions& g, std::ostream& log);
int cmd_sweep(json config, const GlobalOptions& g, std::ostream& log);

std::vector<std::string> verify_suites();

// Worker count for sweeps: CD_DYN_THREADS when set (>= 1), else the hardware concurrency.
unsigned worker_count();

// Full command line entry point; maps errors to exit codes and prints them on err.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cdlab::cli
