#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "recall/harness.hpp"

namespace recall {

/// Bad flags, bad values, or an infeasible configuration; maps to exit 2.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

struct CliInvocation {
    enum class Command { Sweep, Demo };
    Command command = Command::Sweep;
    ExperimentConfig config;
    std::string out_path = "curve.csv";
};

/// Parses arguments (program name excluded). Returns nullopt after printing
/// help to out; throws usage_error on anything invalid.
std::optional<CliInvocation> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed invocation; throws on runtime failures.
void run(const CliInvocation& invocation, std::ostream& out, std::ostream& err);

/// Parse and run, mapping errors to exit codes: 0 success, 1 runtime or I/O
/// error, 2 usage error. Diagnostics go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recall
