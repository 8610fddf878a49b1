#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace igs::cli {

enum ExitCode : int { kOk = 0, kInvalidParameters = 2, kNumericalFailure = 3, kIoFailure = 4 };

/// Parsed command line. Physical parameters are ratios to the hopping J.
struct RunConfig {
  std::string subcommand;
  int n = 499;
  double mu0 = 0.1;
  std::vector<double> j0{2e-3};
  std::optional<int> l;
  std::vector<int> d;
  std::optional<double> mu;
  std::string mu_mode = "closed";
  double delta = 5e-3;
  int realizations = 20;
  std::uint64_t seed = 1;
  std::string out;
  Format format = Format::csv;
  std::optional<double> t_max;
  std::optional<int> t_steps;
  bool deterministic = false;
  std::string trace_out;
  int trace_realization = 0;
};

/// "a:b:step" (inclusive of b) or comma-separated values, or a mix such as
/// "5,15:35:10". Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_range(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

/// Entry point used by the executable. Data goes to --out when given, else to
/// `out`; the human-readable summary goes to `out` (or `err` if data is on `out`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace igs::cli
