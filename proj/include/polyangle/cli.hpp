#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polyangle/geometry.hpp"
#include "polyangle/report.hpp"
#include "polyangle/solid_angle.hpp"

namespace polyangle::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Bad flags or flag combinations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input;                 // polytope file path
  std::vector<std::string> builtin;  // generator name followed by its arguments
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  MethodChoice method = MethodChoice::Auto;
  unsigned workers = 1;
  std::optional<int> k;
  std::string family = "flat-apex";
  std::optional<double> from;
  std::optional<double> to;
  int steps = 20;
  std::string out;
  bool timing = false;
};

struct CommandResult {
  std::vector<Record> records;
  bool passed = true;
};

/// Builds the polytope named by --builtin or loads the input file.
ConvexPolytope load_input(const RunConfig& config);

/// Generator table behind --builtin, e.g. {"cube", "3"} or {"random-simplex", "7", "4"}.
ConvexPolytope make_builtin(const std::vector<std::string>& spec, double tolerance = kDefaultTolerance);

CommandResult cmd_angles(const RunConfig& config);
CommandResult cmd_simulate(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_scan(const RunConfig& config);

/// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyangle::cli
