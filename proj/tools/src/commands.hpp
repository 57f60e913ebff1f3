#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace obsdesign::cli {

enum ExitCode : int { kSuccess = 0, kValidation = 2, kNumerical = 3, kCertification = 4 };

/// Run `command` (problem1, problem2, constants, cantor, nogap) and write its
/// artifacts into `out_dir`. Errors are caught, reported as JSON on `err` and in
/// `out_dir`/error.json, and mapped to an exit code.
int run_command(const std::string& command, const RunConfig& config, const std::string& out_dir,
                std::ostream& err);

}  // namespace obsdesign::cli
