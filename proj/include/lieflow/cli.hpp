#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieflow/flow.hpp"

namespace lieflow {

/// Parsed command-line run. The seed fully determines every randomized trial
/// sequence, so identical configs produce byte-identical outputs.
struct RunConfig {
  enum class Command { classify, simulate, verify, sweep };

  Command command = Command::classify;
  std::string group;
  std::vector<double> coefficients;
  FlowKind flow = FlowKind::invariant;
  std::string method;  ///< closed-form | generic-exp | ode-oracle | "" (auto)
  double horizon = 0.0;
  std::size_t samples = 0;
  double tol = 0.0;  ///< 0 means auto
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string suite = "all";
  std::string format = "json";  ///< json | csv
  std::string out;
  bool timings = false;
  // sweep grid: values taken by each of b, c, d, e; a and f fixed
  double sweep_a = 0.0;
  double sweep_f = 0.0;
  std::vector<double> grid_values{-1.0, 0.0, 1.0};
};

struct CliResult {
  int exit_code = 0;
  std::string output;   ///< payload written to --out or stdout
  std::string summary;  ///< human-readable lines for stderr
};

/// Exit codes: 0 periodic, 1 non-periodic, 2 all-fixed, 3 error.
CliResult cmd_classify(const RunConfig& cfg);

/// Trajectory CSV plus a summary line with membership drift and, for periodic
/// verdicts, measured vs predicted period.
CliResult cmd_simulate(const RunConfig& cfg);

/// Runs the named verification suite (or all of them) with the configured
/// seed; nonzero exit on any failing claim.
CliResult cmd_verify(const RunConfig& cfg);

/// CSV of verdicts over the (b, c, d, e) grid with (a, f) fixed; so4 only.
CliResult cmd_sweep(const RunConfig& cfg);

std::vector<std::string> verify_suite_names();

/// Full argv entry point used by the binary.
int run_cli(int argc, char** argv);

}  // namespace lieflow
