#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cyclesplit::cli {

enum ExitCode : int { kPass = 0, kAssertionFailed = 1, kInputError = 2 };

/// Target value with an absolute tolerance, parsed from "1/3", "0.25",
/// "1/3+-0.01" or "1/3±0.01".
struct DensityAssertion {
  double value = 0.0;
  double tolerance = 0.0;
  bool holds(double observed) const;
};

std::optional<DensityAssertion> parse_density_assertion(std::string_view text);

/// Runs the command line; primary output goes to `out` (or --out), messages
/// to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace cyclesplit::cli
