#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chaundy/polynomial.hpp"
#include "chaundy/rational.hpp"

namespace chaundy {

/// Ordered (name, canonical value string) pairs; integral values render as
/// plain digits, rationals as "p/q".
using Params = std::vector<std::pair<std::string, std::string>>;

/// Machine-readable verdict for one identity instance. Invariant:
/// passed <=> residual renders exactly "0".
struct CheckReport {
    std::string identity;
    Params params;
    bool passed = false;
    std::string residual; // "0" when passed, the exact defect otherwise
    std::string method;
};

/// Test hook: adds delta to one coefficient (or to the scalar left-hand
/// side) of the checked combination before the verdict is computed, so a
/// corrupted instance must surface as a nonzero residual.
struct FaultInjection {
    std::size_t index = 0;
    Rational delta = Rational(1);
};

inline CheckReport poly_report(std::string identity, Params params, const DensePoly& residual,
                               std::string method) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.passed = residual.is_zero();
    r.residual = r.passed ? "0" : residual.str();
    r.method = std::move(method);
    return r;
}

inline CheckReport scalar_report(std::string identity, Params params, const Rational& residual,
                                 std::string method) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.passed = residual == 0;
    r.residual = r.passed ? "0" : to_string(residual);
    r.method = std::move(method);
    return r;
}

/// For composite checks that accumulate a structured defect description: an
/// empty description means every component was exactly zero, i.e. the check
/// passed.
inline CheckReport detail_report(std::string identity, Params params, std::string defect,
                                 std::string method) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.passed = defect.empty();
    r.residual = r.passed ? "0" : std::move(defect);
    r.method = std::move(method);
    return r;
}

} // namespace chaundy
