#ifndef KHOLO_CLI_HPP
#define KHOLO_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kholo/report.hpp"

namespace kholo {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInput = 2, kExitInternal = 3 };

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out` in one write; diagnostics go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Quick randomized consistency run used by the `selftest` subcommand.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace kholo

#endif  // KHOLO_CLI_HPP
