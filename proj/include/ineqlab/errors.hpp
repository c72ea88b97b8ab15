#pragma once

#include <stdexcept>
#include <string>

namespace ineqlab {

// Argument outside the mathematical domain of an operation.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Result not representable in double precision.
struct range_error : std::range_error {
    using std::range_error::range_error;
};

// A quadrature or iteration failed to converge; carries the node count at
// the point of failure so reports can show how hard we tried.
struct numerical_error : std::runtime_error {
    long evaluations;
    numerical_error(const std::string& msg, long evals)
        : std::runtime_error(msg + " (evaluations=" + std::to_string(evals) + ")"),
          evaluations(evals) {}
};

// Bad run configuration (mismatched dimensions, invalid manifest, ...).
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ineqlab
