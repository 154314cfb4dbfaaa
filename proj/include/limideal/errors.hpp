#pragma once

// Error taxonomy. user_error -> CLI exit 1, internal_error -> CLI exit 2.

#include <stdexcept>
#include <string>

namespace limideal {

enum class errc {
    parse_error,
    config_error,
    unknown_preset,
    variable_count_mismatch,
    duplicate_points,
    division_by_zero,
    zero_polynomial,
    step_budget_exceeded,
    not_zero_dimensional,
    not_zero_dimensional_fiber,
    not_monomial,
    not_origin_supported,
    not_single_point,
    unsupported_dimension,
    no_stabilization,
    // internal assertion failures
    internal_length_mismatch,
    method_disagreement,
    graded_inclusion_violation,
    internal_assertion
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// Bad input: rejected configs, malformed polynomials, violated preconditions.
struct user_error : error {
    using error::error;
};

// Broken promise of the library itself; a bug, never a bad input.
struct internal_error : error {
    using error::error;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::config_error: return "ConfigError";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::variable_count_mismatch: return "VariableCountMismatch";
    case errc::duplicate_points: return "DuplicatePoints";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::step_budget_exceeded: return "StepBudgetExceeded";
    case errc::not_zero_dimensional: return "NotZeroDimensional";
    case errc::not_zero_dimensional_fiber: return "NotZeroDimensionalFiber";
    case errc::not_monomial: return "NotMonomial";
    case errc::not_origin_supported: return "NotOriginSupported";
    case errc::not_single_point: return "NotSinglePoint";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::no_stabilization: return "NoStabilization";
    case errc::internal_length_mismatch: return "InternalLengthMismatch";
    case errc::method_disagreement: return "MethodDisagreement";
    case errc::graded_inclusion_violation: return "GradedInclusionViolation";
    case errc::internal_assertion: return "InternalAssertion";
    }
    return "Error";
}

}  // namespace limideal
