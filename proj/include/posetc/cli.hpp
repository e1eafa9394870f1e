#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace posetc::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kWitnessFound = 2,
  kTooLarge = 3,
};

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. When `enum_cap` is empty the antichain
/// enumeration cap comes from POSETC_MAX_ENUM, falling back to the library
/// default.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::size_t> enum_cap = std::nullopt);

}  // namespace posetc::cli
