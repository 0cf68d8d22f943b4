#pragma once

#include <stdexcept>
#include <string>

namespace rmaap {

/// Malformed or out-of-contract input (bad field value, length mismatch,
/// wrong model variant). Messages name the offending field where one exists.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structurally valid input that admits no solution (empty sampling box,
/// budget violations, degenerate configurations).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rmaap
