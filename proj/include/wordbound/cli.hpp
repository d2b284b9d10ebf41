// Command-line front end. `run_cli` is the whole program minus process
// setup, so tests drive it directly.
//
// Exit codes: 0 success or all verdicts pass, 1 a failed verdict,
// 2 usage or parse error, 3 resource limit.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "wordbound/report.hpp"

namespace wordbound {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_resource = 3 };

/// `args` excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

/// An experiment runnable by name with default parameters.
struct ExperimentEntry {
  std::string              name;
  std::string              summary;
  std::vector<std::string> claims;
  std::function<ExperimentReport(std::uint64_t seed)> run_default;
};

/// Experiments in name order.
std::vector<ExperimentEntry> const& experiment_registry();

inline constexpr std::uint64_t default_seed = 42;

/// Runs the named experiments with default parameters on `jobs` worker
/// threads; the result is ordered by name regardless of completion order.
/// The first failure (in name order) is rethrown after all jobs finish.
std::vector<ExperimentReport> run_experiments(std::vector<std::string> const& names,
                                              unsigned jobs, std::uint64_t seed = default_seed);

}  // namespace wordbound
