#pragma once

#include <iosfwd>
#include <string>

#include "becspec/config.hpp"
#include "becspec/spectrum_io.hpp"

namespace becspec {

/// Exit codes used by the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_solver_error = 3;
inline constexpr int exit_io_error = 4;

/// Dispatches the configured model, writes artifacts under out_dir and prints
/// the resolved config plus a one-line summary to `log`. Throws the library
/// error types; the CLI maps them to exit codes.
void run(const RunConfig& config, const std::string& out_dir, OutputFormat format,
         std::ostream& log);

}  // namespace becspec
