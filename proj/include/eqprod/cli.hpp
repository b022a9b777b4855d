#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace eqprod::cli {

enum ExitCode : int {
    kOk = 0,
    kNoResult = 1,
    kUsage = 2,
    kBudget = 3,
};

enum class Format { Auto, Text, Json, Csv, Bfile };

struct RunConfig {
    std::string command;
    Format format = Format::Auto;
    unsigned workers = 1;
    std::uint64_t node_cap = 20'000'000;
    std::uint64_t scan_ceiling = 200;
    std::uint64_t cap = 120;
};

/// Parses `args` (without the program name), runs the subcommand and writes
/// its output to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eqprod::cli
