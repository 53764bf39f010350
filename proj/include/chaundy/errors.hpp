#pragma once

#include <stdexcept>
#include <string>

namespace chaundy {

/// Two polynomials were combined while living in different bases.
struct basis_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The operation is defined only for a specific basis (e.g. substitution in
/// the monomial basis) and was handed the other one.
struct unsupported_basis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// extended_euclid(0, 0) has no gcd.
struct both_zero_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An identity was invoked outside its stated parameter range (k > n etc.).
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct nonpositive_parameter_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A rising factorial in a denominator vanished for the given arguments.
struct singular_denominator_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature exhausted its refinement budget.
struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed CLI / sweep configuration.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace chaundy
