#pragma once

#include <stdexcept>
#include <string>

namespace becspec {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what, std::vector<double> residuals = {})
        : std::runtime_error(what), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace becspec
