#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "bagraph/verify.hpp"

namespace bagraph::cli {

enum ExitCode : int {
    exit_success = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

/// Environment variable consulted for the default worker count.
inline constexpr const char* threads_env = "BAGRAPH_THREADS";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// The `verify` subcommand against an arbitrary evaluator set.
int run_verify(const verify::VerifyOptions& options, const verify::FormulaSet& formulas, std::ostream& out,
               std::ostream& err);

}  // namespace bagraph::cli
