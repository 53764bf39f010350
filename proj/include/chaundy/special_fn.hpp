#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaundy/check_report.hpp"
#include "chaundy/combinatorics.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/polynomial.hpp"
#include "chaundy/rational.hpp"

namespace chaundy {

// Incomplete beta function B_a(x, y) = int_0^a t^(x-1) (1-t)^(y-1) dt.
// Positive-integer parameters get the exact polynomial in a; general positive
// real parameters go through validated adaptive quadrature.

/// Exact form for integer parameters p, q >= 1:
///   B_a(p, q) = sum_{j=0}^{q-1} (-1)^j C(q-1, j) a^(p+j) / (p+j),
/// returned as a monomial-basis polynomial in a.
inline DensePoly incomplete_beta_exact(Index p, Index q) {
    if (p < 1 || q < 1)
        throw nonpositive_parameter_error("incomplete_beta_exact requires p, q >= 1");
    std::vector<Rational> coeffs(p + q, Rational(0));
    for (Index j = 0; j < q; ++j) {
        Rational c(Int(binomial(q - 1, j)), Int(p + j));
        coeffs[p + j] = (j % 2 == 0) ? c : -c;
    }
    return DensePoly(std::move(coeffs));
}

struct QuadOptions {
    long double abs_tol = 1e-12L;
    std::size_t max_subdivisions = 200000; // refinement budget, then hard failure
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1]; nodes by Newton on P_15 so the
// constants carry full long double precision.
inline const std::array<std::pair<long double, long double>, 15>& gl15() {
    static const auto rule = [] {
        constexpr int n = 15;
        std::array<std::pair<long double, long double>, 15> r{};
        for (int i = 1; i <= n; ++i) {
            long double x =
                std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (n + 0.5L));
            long double dp = 0;
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                long double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-19L) break;
            }
            r[i - 1] = {x, 2.0L / ((1 - x * x) * dp * dp)};
        }
        return r;
    }();
    return rule;
}

template <class F>
long double gl15_apply(const F& f, long double a, long double b) {
    const long double c = (a + b) / 2, h = (b - a) / 2;
    long double s = 0;
    for (const auto& [x, w] : gl15()) s += w * f(c + h * x);
    return s * h;
}

// Adaptive bisection: an interval is accepted when the two-half refinement
// moves the estimate by less than its local tolerance.
template <class F>
long double integrate_adaptive(const F& f, long double a, long double b, long double tol,
                               std::size_t& budget) {
    if (!(a < b)) return 0;
    struct Segment {
        long double a, b, whole, tol;
        int depth;
    };
    std::vector<Segment> stack{{a, b, gl15_apply(f, a, b), tol, 0}};
    long double total = 0;
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        if (budget == 0)
            throw nonconvergence_error("quadrature refinement budget exhausted");
        --budget;
        const long double mid = (s.a + s.b) / 2;
        const long double left = gl15_apply(f, s.a, mid);
        const long double right = gl15_apply(f, mid, s.b);
        const long double sum = left + right;
        if (std::fabs(sum - s.whole) <= s.tol || s.depth >= 60) {
            total += sum;
        } else {
            stack.push_back({s.a, mid, left, s.tol / 2, s.depth + 1});
            stack.push_back({mid, s.b, right, s.tol / 2, s.depth + 1});
        }
    }
    return total;
}

} // namespace detail

/// B_a(x, y) for positive real x, y and a in [0, 1], to absolute accuracy
/// abs_tol (default 1e-12). Endpoint singularities (x < 1 at t = 0, y < 1 at
/// t = 1) are removed by the power substitutions t = u^(1/x) and the mirrored
/// s = v^(1/y), which turn the unbounded integrand into a bounded one.
inline long double incomplete_beta_numeric(long double x, long double y, long double a,
                                           const QuadOptions& opt = {}) {
    if (!(x > 0) || !(y > 0))
        throw std::domain_error("incomplete beta requires x > 0 and y > 0");
    if (!(a >= 0 && a <= 1))
        throw std::domain_error("incomplete beta requires 0 <= a <= 1");
    if (a == 0) return 0;

    std::size_t budget = opt.max_subdivisions;
    const long double split = 0.5L;
    const int pieces = a > split ? 2 : 1;
    const long double tol = opt.abs_tol / (2 * pieces);

    long double result = 0;

    // [0, min(a, 1/2)]
    {
        const long double hi = std::min(a, split);
        if (x < 1) {
            auto g = [&](long double u) {
                return (1 / x) * std::pow(1 - std::pow(u, 1 / x), y - 1);
            };
            result += detail::integrate_adaptive(g, 0.0L, std::pow(hi, x), tol, budget);
        } else {
            auto g = [&](long double t) {
                return std::pow(t, x - 1) * std::pow(1 - t, y - 1);
            };
            result += detail::integrate_adaptive(g, 0.0L, hi, tol, budget);
        }
    }

    // [1/2, a], reflected to s = 1 - t in [1-a, 1/2]
    if (pieces == 2) {
        const long double lo = 1 - a;
        if (y < 1) {
            auto g = [&](long double v) {
                return (1 / y) * std::pow(1 - std::pow(v, 1 / y), x - 1);
            };
            result += detail::integrate_adaptive(g, std::pow(lo, y), std::pow(split, y), tol,
                                                 budget);
        } else {
            auto g = [&](long double s) {
                return std::pow(1 - s, x - 1) * std::pow(s, y - 1);
            };
            result += detail::integrate_adaptive(g, lo, split, tol, budget);
        }
    }
    return result;
}

/// B(alpha+p, beta+q) / B(alpha, beta) = alpha^((p)) beta^((q)) / (alpha+beta)^((p+q)),
/// exactly in rationals.
inline Rational beta_shift_ratio(Index p, Index q, const Rational& alpha, const Rational& beta) {
    const Rational ab = alpha + beta;
    for (Index j = 0; j + 1 <= p + q; ++j)
        if (ab + Int(j) == 0)
            throw singular_denominator_error("alpha + beta + " + std::to_string(j) +
                                             " vanishes in the denominator");
    return rising_factorial(alpha, p) * rising_factorial(beta, q) /
           rising_factorial(ab, p + q);
}

/// Checks
///   sum_{k<=m} C(n+k,k) B_a(alpha+k, beta+n+1)
///     + sum_{k<=n} C(m+k,k) B_a(alpha+m+1, beta+k) = B_a(alpha, beta).
///
/// Exact mode (both parameters positive integers): both sides are
/// polynomials in a and must be structurally equal. Numeric mode: quadrature
/// on both sides at the given a, absolute defect at most 1e-10; every term's
/// integral is driven to 1e-12 scaled down by its binomial weight so the
/// summed error stays inside the identity tolerance.
inline CheckReport verify_beta_identity(Index n, Index m, const Rational& alpha,
                                        const Rational& beta,
                                        const std::optional<Rational>& a = std::nullopt,
                                        const FaultInjection* fault = nullptr) {
    if (!(alpha > 0) || !(beta > 0))
        throw std::domain_error("beta identity requires alpha > 0 and beta > 0");
    if (a && (*a < 0 || *a > 1))
        throw std::domain_error("beta identity requires 0 <= a <= 1");

    Params params{{"n", std::to_string(n)},
                  {"m", std::to_string(m)},
                  {"alpha", to_string(alpha)},
                  {"beta", to_string(beta)}};

    const bool exact = is_integer(alpha) && is_integer(beta);
    if (exact) {
        const Index ia = static_cast<Index>(numer(alpha).convert_to<unsigned long>());
        const Index ib = static_cast<Index>(numer(beta).convert_to<unsigned long>());
        DensePoly lhs;
        for (Index k = 0; k <= m; ++k)
            lhs += Rational(binomial(n + k, k)) * incomplete_beta_exact(ia + k, ib + n + 1);
        for (Index k = 0; k <= n; ++k)
            lhs += Rational(binomial(m + k, k)) * incomplete_beta_exact(ia + m + 1, ib + k);
        if (fault) lhs.add_to_coeff(fault->index, fault->delta);
        DensePoly residual = lhs - incomplete_beta_exact(ia, ib);
        return poly_report("beta", std::move(params), residual,
                           "exact polynomial-in-a expansion");
    }

    if (!a)
        throw config_error("numeric beta mode needs an evaluation point a");
    params.emplace_back("a", to_string(*a));

    const long double av = to_long_double(*a);
    const long double al = to_long_double(alpha);
    const long double be = to_long_double(beta);
    const long double tol = 1e-10L;

    auto weighted_term = [&](const Int& weight, long double xx, long double yy) {
        QuadOptions opt;
        const long double w = weight.convert_to<long double>();
        opt.abs_tol = 1e-12L / std::max(1.0L, w);
        return w * incomplete_beta_numeric(xx, yy, av, opt);
    };

    long double lhs = 0;
    for (Index k = 0; k <= m; ++k)
        lhs += weighted_term(binomial(n + k, k), al + k, be + n + 1);
    for (Index k = 0; k <= n; ++k)
        lhs += weighted_term(binomial(m + k, k), al + m + 1, be + k);
    if (fault) lhs += to_long_double(fault->delta);
    const long double rhs = incomplete_beta_numeric(al, be, av);
    const long double defect = lhs - rhs;

    CheckReport r;
    r.identity = "beta";
    r.params = std::move(params);
    r.passed = std::fabs(defect) <= tol;
    r.residual = r.passed ? "0" : decimal_string(defect);
    r.method = "adaptive quadrature, |defect| <= 1e-10";
    return r;
}

} // namespace chaundy
