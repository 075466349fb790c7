#pragma once

#include <stdexcept>
#include <string>

namespace resetfreq {

/// Shape/precondition violations (non-square input, mismatched dimensions, ...).
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix was singular (or too ill-conditioned) for the requested operation.
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iteration failed to converge (simulation steady state, eigensolver, ...).
struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace resetfreq
