#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "chaundy/check_report.hpp"
#include "chaundy/combinatorics.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/polynomial.hpp"

namespace chaundy {

// The unique pair (P, Q) with deg P <= n, deg Q <= m solving
//
//     x^(m+1) P(x) + (1-x)^(n+1) Q(x) = 1,
//
// constructed below by three independent routes plus a generic
// extended-Euclid oracle that certifies uniqueness.

enum class BezoutMethod { ClosedForm, Recurrence, EuclidOracle };

inline const char* method_name(BezoutMethod m) {
    switch (m) {
        case BezoutMethod::ClosedForm: return "closed-form";
        case BezoutMethod::Recurrence: return "recurrence";
        case BezoutMethod::EuclidOracle: return "euclid-oracle";
    }
    return "?";
}

struct BezoutSolution {
    Index n = 0;
    Index m = 0;
    DensePoly P; // monomial, deg <= n
    DensePoly Q; // monomial, deg <= m
    BezoutMethod method = BezoutMethod::ClosedForm;
};

/// mu is the proportionality constant in the first-order ODEs satisfied by
/// Q and P: mu = (n+1) C(n+m+1, m).
inline Int mu(Index n, Index m) { return Int(n + 1) * binomial(n + m + 1, m); }

/// x^(m+1) P + (1-x)^(n+1) Q - 1; identically zero for a valid pair.
inline DensePoly bezout_residual(const DensePoly& P, const DensePoly& Q, Index n, Index m) {
    DensePoly xm1 = pow(DensePoly::variable(), m + 1);
    DensePoly omx = pow(DensePoly::one_minus_x(), n + 1);
    DensePoly r = xm1 * P + omx * Q;
    r.add_to_coeff(0, Rational(-1));
    return r;
}

/// Monomial coefficients p_k = (-1)^k (n+m+1)/(k+m+1) C(n+m, m) C(n, k) and
/// q_k = C(n+k, k). Each p_k is asserted integral before use: integrality is
/// a nonobvious consequence of the identity, worth a runtime check.
inline BezoutSolution closed_form(Index n, Index m) {
    std::vector<Rational> p(n + 1), q(m + 1);
    const Rational scale = Rational(Int(n + m + 1)) * Rational(binomial(n + m, m));
    for (Index k = 0; k <= n; ++k) {
        Rational v = scale * Rational(binomial(n, k)) / Rational(Int(k + m + 1));
        if (!is_integer(v))
            throw std::logic_error("closed-form coefficient p_" + std::to_string(k) +
                                   " is not integral for n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
        p[k] = (k % 2 == 0) ? v : -v;
    }
    for (Index k = 0; k <= m; ++k) q[k] = Rational(binomial(n + k, k));
    return {n, m, DensePoly(std::move(p)), DensePoly(std::move(q)), BezoutMethod::ClosedForm};
}

/// The mixed-basis sums
///   P(x) = sum_k C(n+m+1, k) x^(n-k) (1-x)^k          (k = 0..n)
///   Q(x) = sum_k C(n+m+1, k) x^k     (1-x)^(m-k)      (k = 0..m)
/// expanded into the monomial basis.
inline std::pair<DensePoly, DensePoly> closed_form_factored(Index n, Index m) {
    DensePoly P, Q;
    for (Index k = 0; k <= n; ++k) {
        DensePoly term = pow(DensePoly::variable(), n - k) * pow(DensePoly::one_minus_x(), k);
        P += Rational(binomial(n + m + 1, k)) * term;
    }
    for (Index k = 0; k <= m; ++k) {
        DensePoly term = pow(DensePoly::variable(), k) * pow(DensePoly::one_minus_x(), m - k);
        Q += Rational(binomial(n + m + 1, k)) * term;
    }
    return {std::move(P), std::move(Q)};
}

/// Q from q_0 = 1 upward via q_{k+1} = (n+k+1)/(k+1) q_k; P from
/// p_k = (-1)^k mu C(n, k) / (m+k+1).
inline BezoutSolution recurrence_solution(Index n, Index m) {
    std::vector<Rational> q(m + 1);
    q[0] = 1;
    for (Index k = 0; k + 1 <= m; ++k) q[k + 1] = q[k] * Int(n + k + 1) / Int(k + 1);

    const Rational mu_nm{mu(n, m)};
    std::vector<Rational> p(n + 1);
    for (Index k = 0; k <= n; ++k) {
        Rational v = mu_nm * Rational(binomial(n, k)) / Rational(Int(m + k + 1));
        p[k] = (k % 2 == 0) ? v : -v;
    }
    return {n, m, DensePoly(std::move(p)), DensePoly(std::move(q)), BezoutMethod::Recurrence};
}

/// Residuals of the two first-order ODEs a valid pair must satisfy:
///   (n+1) Q - (1-x) Q' - mu x^m    and    (m+1) P + x P' - mu (1-x)^n.
inline std::pair<DensePoly, DensePoly> ode_residuals(const BezoutSolution& sol) {
    const Rational mu_nm{mu(sol.n, sol.m)};
    const DensePoly x = DensePoly::variable();

    DensePoly rq = Rational(Int(sol.n + 1)) * sol.Q - DensePoly::one_minus_x() * sol.Q.derivative();
    rq -= mu_nm * pow(x, sol.m);

    DensePoly rp = Rational(Int(sol.m + 1)) * sol.P + x * sol.P.derivative();
    rp -= mu_nm * pow(DensePoly::one_minus_x(), sol.n);

    return {std::move(rq), std::move(rp)};
}

/// Extended Euclid over Q[x] with monic normalization at every division
/// step. Returns (u, v, g) with A u + B v = g, g the monic gcd, and the
/// cofactors reduced to the minimal-degree normal form
///   deg u < deg B - deg g,   deg v < deg A - deg g,
/// which is the normal form under which the Bezout pair is unique.
inline std::tuple<DensePoly, DensePoly, DensePoly> extended_euclid(const DensePoly& A,
                                                                   const DensePoly& B) {
    if (A.is_zero() && B.is_zero())
        throw both_zero_error("extended_euclid(0, 0) is undefined");

    DensePoly r0 = A, r1 = B;
    DensePoly u0 = DensePoly::constant(1), v0;
    DensePoly u1, v1 = DensePoly::constant(1);

    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        DensePoly u2 = u0 - quot * u1;
        DensePoly v2 = v0 - quot * v1;
        if (!rem.is_zero()) {
            // monic remainder keeps the sequence canonical
            Rational inv_lead = Rational(1) / rem.coeff(*rem.degree());
            rem *= inv_lead;
            u2 *= inv_lead;
            v2 *= inv_lead;
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        v0 = std::move(v1);
        r1 = std::move(rem);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }

    // r0 is the gcd; make it monic (it already is after any division step,
    // but A or B may have survived untouched).
    Rational lead = r0.coeff(*r0.degree());
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        r0 *= inv;
        u0 *= inv;
        v0 *= inv;
    }

    // Minimal-degree normalization: u := u mod (B/g), v := (g - A u)/B.
    if (!B.is_zero()) {
        auto [bg, bg_rem] = divmod(B, r0);
        if (!bg_rem.is_zero()) throw std::logic_error("gcd does not divide B");
        u0 = divmod(u0, bg).second;
        DensePoly num = r0 - A * u0;
        if (num.is_zero()) {
            v0 = DensePoly();
        } else {
            auto [v, v_rem] = divmod(num, B);
            if (!v_rem.is_zero()) throw std::logic_error("cofactor normalization failed");
            v0 = std::move(v);
        }
    }
    return {std::move(u0), std::move(v0), std::move(r0)};
}

/// The pair obtained by running the generic oracle on (x^(m+1), (1-x)^(n+1)).
/// The minimal-degree normal form forces u = P and v = Q.
inline BezoutSolution euclid_solution(Index n, Index m) {
    DensePoly A = pow(DensePoly::variable(), m + 1);
    DensePoly B = pow(DensePoly::one_minus_x(), n + 1);
    auto [u, v, g] = extended_euclid(A, B);
    if (!(g == DensePoly::constant(1)))
        throw std::logic_error("x^(m+1) and (1-x)^(n+1) must be coprime");
    return {n, m, std::move(u), std::move(v), BezoutMethod::EuclidOracle};
}

/// One sweep instance: all four constructions agree coefficientwise, the
/// defining combination has residual zero, and both ODE residuals vanish.
inline CheckReport bezout_cross_check(Index n, Index m, const FaultInjection* fault = nullptr) {
    BezoutSolution closed = closed_form(n, m);
    auto [pf, qf] = closed_form_factored(n, m);
    BezoutSolution recur = recurrence_solution(n, m);
    BezoutSolution oracle = euclid_solution(n, m);

    if (fault) recur.Q.add_to_coeff(fault->index % (m + 1), fault->delta);

    std::string defect;
    auto mismatch = [&](const char* label, const DensePoly& got, const DensePoly& want) {
        if (!(got == want))
            defect += std::string(defect.empty() ? "" : "; ") + label + ": " +
                      (got - want).str();
    };
    mismatch("factored P", pf, closed.P);
    mismatch("factored Q", qf, closed.Q);
    mismatch("recurrence P", recur.P, closed.P);
    mismatch("recurrence Q", recur.Q, closed.Q);
    mismatch("euclid P", oracle.P, closed.P);
    mismatch("euclid Q", oracle.Q, closed.Q);

    DensePoly residual = bezout_residual(closed.P, closed.Q, n, m);
    if (!residual.is_zero()) defect += std::string(defect.empty() ? "" : "; ") +
                                       "combination: " + residual.str();
    auto [rq, rp] = ode_residuals(closed);
    if (!rq.is_zero()) defect += std::string(defect.empty() ? "" : "; ") + "ode Q: " + rq.str();
    if (!rp.is_zero()) defect += std::string(defect.empty() ? "" : "; ") + "ode P: " + rp.str();

    return detail_report("bezout-cross-check",
                         {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                         std::move(defect),
                         "closed-form vs factored vs recurrence vs euclid-oracle");
}

} // namespace chaundy
