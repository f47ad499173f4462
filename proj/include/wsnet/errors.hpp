#pragma once

#include <stdexcept>

namespace wsnet {

// Invalid configuration or argument values. The CLI maps this to its usage
// exit code.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or insufficient input data (parse failures, samples too small to
// fit, degenerate histograms).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stream or filesystem failures while writing results.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wsnet
