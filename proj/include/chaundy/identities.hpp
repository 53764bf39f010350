#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chaundy/bezout.hpp"
#include "chaundy/bipoly.hpp"
#include "chaundy/check_report.hpp"
#include "chaundy/combinatorics.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/polynomial.hpp"

namespace chaundy {

namespace detail {
inline int sign_pow(Index e) { return e % 2 == 0 ? 1 : -1; }

inline Params nm_params(Index n, Index m) {
    return {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
}

inline void append_defect(std::string& defect, const std::string& piece) {
    if (!defect.empty()) defect += "; ";
    defect += piece;
}
} // namespace detail

// ---------------------------------------------------------------------------
// Partition of unity: the two halves of the Chaundy-Bullard identity.
// ---------------------------------------------------------------------------

/// U(x) = x^(m+1) sum_{k<=n} C(m+k, k) (1-x)^k, degree n+m+1.
inline DensePoly u_poly(Index n, Index m) {
    DensePoly sum;
    for (Index k = 0; k <= n; ++k)
        sum += Rational(binomial(m + k, k)) * pow(DensePoly::one_minus_x(), k);
    return pow(DensePoly::variable(), m + 1) * sum;
}

/// V(x) = (1-x)^(n+1) sum_{k<=m} C(n+k, k) x^k, degree n+m+1.
inline DensePoly v_poly(Index n, Index m) {
    DensePoly sum;
    for (Index k = 0; k <= m; ++k)
        sum += Rational(binomial(n + k, k)) * pow(DensePoly::variable(), k);
    return pow(DensePoly::one_minus_x(), n + 1) * sum;
}

/// (1-x)^(n+1) sum C(n+k,k) x^k + x^(m+1) sum C(m+k,k) (1-x)^k == 1.
inline CheckReport verify_chaundy_bullard(Index n, Index m,
                                          const FaultInjection* fault = nullptr) {
    DensePoly lhs = v_poly(n, m) + u_poly(n, m);
    if (fault) lhs.add_to_coeff(fault->index, fault->delta);
    lhs.add_to_coeff(0, Rational(-1));
    return poly_report("chaundy-bullard", detail::nm_params(n, m), lhs, "symbolic-expansion");
}

/// P_{n,m}(x) == Q_{m,n}(1-x).
inline CheckReport verify_symmetry(Index n, Index m, const FaultInjection* fault = nullptr) {
    DensePoly lhs = closed_form(n, m).P;
    if (fault) lhs.add_to_coeff(fault->index, fault->delta);
    DensePoly rhs = closed_form(m, n).Q.compose_one_minus_x();
    return poly_report("symmetry", detail::nm_params(n, m), lhs - rhs,
                       "closed form vs substituted swap");
}

// ---------------------------------------------------------------------------
// The coefficient machinery of the combinatorial proof.
// ---------------------------------------------------------------------------

/// a_k = (-1)^k sum_{nu=k}^{n} C(m+nu, nu) C(nu, k)       (0 <= k <= n)
/// d_k = sum_nu b_{k-nu} c_nu  (Cauchy product)           (0 <= k <= n+m+1)
/// with b_k = (-1)^k C(n+1, k) and c_k = C(n+k, k) [k <= m]. U expands to
/// sum a_{k-m-1} x^k and V to sum d_k x^k.
struct SecondProofCoefficients {
    Index n = 0;
    Index m = 0;
    std::vector<Rational> a; // indexed 0..n
    std::vector<Rational> d; // indexed 0..n+m+1
};

inline SecondProofCoefficients second_proof_coefficients(Index n, Index m) {
    SecondProofCoefficients out;
    out.n = n;
    out.m = m;

    out.a.resize(n + 1);
    for (Index k = 0; k <= n; ++k) {
        Int s = 0;
        for (Index nu = k; nu <= n; ++nu) s += binomial(m + nu, nu) * binomial(nu, k);
        out.a[k] = Rational(detail::sign_pow(k) * s);
    }

    // b is finite: C(n+1, k) vanishes for k > n+1, so truncating there drops
    // nothing.
    std::vector<Int> b(n + 2), c(m + 1);
    for (Index k = 0; k <= n + 1; ++k) b[k] = detail::sign_pow(k) * binomial(n + 1, k);
    for (Index k = 0; k <= m; ++k) c[k] = binomial(n + k, k);

    out.d.assign(n + m + 2, Rational(0));
    for (Index i = 0; i <= n + 1; ++i)
        for (Index j = 0; j <= m; ++j) out.d[i + j] += Rational(b[i] * c[j]);

    // Cross-check the tail form d_k = (-1)^k sum_{nu<=m} (-1)^nu C(n+nu,nu) C(n+1,k-nu).
    for (Index k = m + 1; k <= n + m + 1; ++k) {
        Int s = 0;
        for (Index nu = 0; nu <= m; ++nu)
            s += Int(detail::sign_pow(nu)) * binomial(n + nu, nu) * binomial(n + 1, k - nu);
        if (out.d[k] != Rational(Int(detail::sign_pow(k)) * s))
            throw std::logic_error("Cauchy-product d_k disagrees with its tail form");
    }
    return out;
}

/// d_0 = 1, d_k = 0 for 1 <= k <= m, a_{k-m-1} + d_k = 0 for the remaining k,
/// and the reassembled U + V expands to the constant 1.
inline CheckReport verify_cancellation(Index n, Index m, const FaultInjection* fault = nullptr) {
    SecondProofCoefficients sp = second_proof_coefficients(n, m);
    if (fault) sp.a[fault->index % sp.a.size()] += fault->delta;

    std::string defect;
    if (sp.d[0] != 1) detail::append_defect(defect, "d[0] = " + to_string(sp.d[0]));
    for (Index k = 1; k <= m; ++k)
        if (sp.d[k] != 0)
            detail::append_defect(defect, "d[" + std::to_string(k) + "] = " + to_string(sp.d[k]));
    for (Index k = m + 1; k <= n + m + 1; ++k) {
        Rational s = sp.a[k - m - 1] + sp.d[k];
        if (s != 0)
            detail::append_defect(defect, "a[" + std::to_string(k - m - 1) + "] + d[" +
                                              std::to_string(k) + "] = " + to_string(s));
    }
    DensePoly uv = u_poly(n, m) + v_poly(n, m);
    uv.add_to_coeff(0, Rational(-1));
    if (!uv.is_zero()) detail::append_defect(defect, "U+V-1 = " + uv.str());

    return detail_report("cancellation", detail::nm_params(n, m), std::move(defect),
                         "cauchy product, coefficient cancellation, reassembled sum");
}

// ---------------------------------------------------------------------------
// Brill's identity and the triple-sum lemma behind the cancellation.
// ---------------------------------------------------------------------------

/// Both sides of sum_{nu<=p} (-1)^nu C(x+nu, nu+1) C(x, p-nu) = C(x, p+1),
/// for arbitrary rational x.
inline std::pair<Rational, Rational> brill_sum(Index p, const Rational& x) {
    Rational lhs = 0;
    for (Index nu = 0; nu <= p; ++nu) {
        Rational term = gen_binomial(x + Int(nu), nu + 1) * gen_binomial(x, p - nu);
        lhs += detail::sign_pow(nu) * term;
    }
    return {lhs, gen_binomial(x, p + 1)};
}

inline CheckReport verify_brill(Index p, const Rational& x, const FaultInjection* fault = nullptr) {
    auto [lhs, rhs] = brill_sum(p, x);
    if (fault) lhs += fault->delta;
    return scalar_report("brill", {{"p", std::to_string(p)}, {"x", to_string(x)}}, lhs - rhs,
                         "exact alternating summation vs closed form");
}

inline void require_k_le_n(Index k, Index n) {
    if (k > n)
        throw precondition_error("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

/// S_n(k, m) = sum_{nu=k}^{n} C(m+nu, nu) C(nu, k).
inline Rational lemma42_S(Index k, Index n, Index m) {
    require_k_le_n(k, n);
    Int s = 0;
    for (Index nu = k; nu <= n; ++nu) s += binomial(m + nu, nu) * binomial(nu, k);
    return Rational(s);
}

/// R_m(k, n) = (-1)^m sum_{nu=0}^{m} (-1)^nu C(n+nu, nu) C(n+1, m+k+1-nu).
inline Rational lemma42_R(Index k, Index n, Index m) {
    require_k_le_n(k, n);
    Int s = 0;
    for (Index nu = 0; nu <= m; ++nu)
        s += Int(detail::sign_pow(nu)) * binomial(n + nu, nu) * binomial(n + 1, m + k + 1 - nu);
    return Rational(Int(detail::sign_pow(m)) * s);
}

/// T_n(k, m) = (n+m+1)/(m+k+1) C(n+m, m) C(n, k).
inline Rational lemma42_T(Index k, Index n, Index m) {
    require_k_le_n(k, n);
    return Rational(Int(n + m + 1)) * Rational(binomial(n + m, m)) * Rational(binomial(n, k)) /
           Rational(Int(m + k + 1));
}

/// (S, R, T); the lemma asserts all three are equal.
inline std::tuple<Rational, Rational, Rational> lemma42_triple(Index k, Index n, Index m) {
    return {lemma42_S(k, n, m), lemma42_R(k, n, m), lemma42_T(k, n, m)};
}

inline CheckReport verify_lemma42(Index k, Index n, Index m,
                                  const FaultInjection* fault = nullptr) {
    auto [s, r, t] = lemma42_triple(k, n, m);
    if (fault) s += fault->delta;
    std::string defect;
    if (s != t) detail::append_defect(defect, "S - T = " + to_string(Rational(s - t)));
    if (r != t) detail::append_defect(defect, "R - T = " + to_string(Rational(r - t)));
    return detail_report("lemma42",
                         {{"k", std::to_string(k)},
                          {"n", std::to_string(n)},
                          {"m", std::to_string(m)}},
                         std::move(defect), "three independent summations");
}

/// Telescoping witness
///   W_nu = (-1)^(m-nu) nu (nu+n-k-m) / ((n+1)(k+m+1)) C(n+1, m+k+1-nu) C(n+nu, n).
inline Rational lemma42_W(Index k, Index n, Index m, Index nu) {
    require_k_le_n(k, n);
    Int numerator = Int(nu) * (Int(nu) + Int(n) - Int(k) - Int(m));
    Rational w = Rational(numerator, Int(n + 1) * Int(k + m + 1));
    w *= Rational(binomial(n + 1, m + k + 1 - nu) * binomial(n + nu, n));
    return detail::sign_pow(m + nu) * w;
}

/// W_0 = 0, each difference W_nu - W_{nu+1} reproduces the alternating
/// summand of R, and -W_{m+1} = T_n.
inline CheckReport w_telescoping_check(Index k, Index n, Index m,
                                       const FaultInjection* fault = nullptr) {
    require_k_le_n(k, n);
    std::vector<Rational> w(m + 2);
    for (Index nu = 0; nu <= m + 1; ++nu) w[nu] = lemma42_W(k, n, m, nu);
    if (fault) w[fault->index % w.size()] += fault->delta;

    std::string defect;
    if (w[0] != 0) detail::append_defect(defect, "W_0 = " + to_string(w[0]));
    for (Index nu = 0; nu <= m; ++nu) {
        Rational want = Rational(Int(detail::sign_pow(m + nu)) * binomial(n + nu, nu) *
                                 binomial(n + 1, m + k + 1 - nu));
        Rational got = w[nu] - w[nu + 1];
        if (got != want)
            detail::append_defect(defect, "W_" + std::to_string(nu) + " - W_" +
                                              std::to_string(nu + 1) + " off by " +
                                              to_string(Rational(got - want)));
    }
    Rational t = lemma42_T(k, n, m);
    if (-w[m + 1] != t)
        detail::append_defect(defect, "-W_{m+1} - T = " + to_string(Rational(-w[m + 1] - t)));

    return detail_report("w-telescoping",
                         {{"k", std::to_string(k)},
                          {"n", std::to_string(n)},
                          {"m", std::to_string(m)}},
                         std::move(defect), "telescoping witness chain");
}

// ---------------------------------------------------------------------------
// The three-way expansion of Q in shifted bases (univariate and bivariate).
// ---------------------------------------------------------------------------

/// Member 1: sum_{k<=m} C(n+m+1, k) x^k (1-x)^(m-k)
/// Member 2: sum_{k<=m} C(n+k, k) x^k
/// Member 3: (n+m+1) C(n+m, m) sum_{k<=m} (-1)^k/(k+n+1) C(m, k) (1-x)^k
/// All three equal Q_{n,m}.
inline DensePoly rising_chain_univariate(int member, Index n, Index m) {
    DensePoly out;
    switch (member) {
        case 1:
            for (Index k = 0; k <= m; ++k)
                out += Rational(binomial(n + m + 1, k)) *
                       (pow(DensePoly::variable(), k) * pow(DensePoly::one_minus_x(), m - k));
            return out;
        case 2:
            for (Index k = 0; k <= m; ++k)
                out += Rational(binomial(n + k, k)) * pow(DensePoly::variable(), k);
            return out;
        case 3: {
            for (Index k = 0; k <= m; ++k) {
                Rational c = Rational(Int(detail::sign_pow(k)) * binomial(m, k), Int(k + n + 1));
                out += c * pow(DensePoly::one_minus_x(), k);
            }
            return Rational(Int(n + m + 1) * binomial(n + m, m)) * out;
        }
        default: throw std::logic_error("chain member must be 1, 2 or 3");
    }
}

/// The same chain after the beta-integral transform, as polynomials in
/// (alpha, beta):
/// Member 1: sum_k C(n+m+1, k) alpha^(k) beta^(m-k)
/// Member 2: sum_k C(n+k, k) alpha^(k) (alpha+beta+k)^(m-k)
/// Member 3: (n+m+1) C(n+m, m) sum_k (-1)^k/(k+n+1) C(m, k) beta^(k) (alpha+beta+k)^(m-k)
inline BiPoly rising_chain_bivariate(int member, Index n, Index m) {
    const BiPoly a = BiPoly::alpha();
    const BiPoly b = BiPoly::beta();
    BiPoly out;
    switch (member) {
        case 1:
            for (Index k = 0; k <= m; ++k)
                out += Rational(binomial(n + m + 1, k)) *
                       (rising_factorial_bipoly(a, k) * rising_factorial_bipoly(b, m - k));
            return out;
        case 2:
            for (Index k = 0; k <= m; ++k) {
                BiPoly shifted = a + b + BiPoly::constant(Rational(Int(k)));
                out += Rational(binomial(n + k, k)) *
                       (rising_factorial_bipoly(a, k) * rising_factorial_bipoly(shifted, m - k));
            }
            return out;
        case 3: {
            for (Index k = 0; k <= m; ++k) {
                BiPoly shifted = a + b + BiPoly::constant(Rational(Int(k)));
                Rational c = Rational(Int(detail::sign_pow(k)) * binomial(m, k), Int(k + n + 1));
                out += c * (rising_factorial_bipoly(b, k) *
                            rising_factorial_bipoly(shifted, m - k));
            }
            return Rational(Int(n + m + 1) * binomial(n + m, m)) * out;
        }
        default: throw std::logic_error("chain member must be 1, 2 or 3");
    }
}

/// Verifies both chains. The bivariate identity is checked as a polynomial
/// identity with rational coefficients, which settles it for all complex
/// (alpha, beta); the method string records that reasoning.
inline CheckReport verify_remark62(Index n, Index m, const FaultInjection* fault = nullptr) {
    DensePoly e1 = rising_chain_univariate(1, n, m);
    const DensePoly e2 = rising_chain_univariate(2, n, m);
    const DensePoly e3 = rising_chain_univariate(3, n, m);
    if (fault) e1.add_to_coeff(fault->index, fault->delta);

    std::string defect;
    if (!(e1 == e2)) detail::append_defect(defect, "univariate 1-2: " + (e1 - e2).str());
    if (!(e2 == e3)) detail::append_defect(defect, "univariate 2-3: " + (e2 - e3).str());

    const BiPoly b1 = rising_chain_bivariate(1, n, m);
    const BiPoly b2 = rising_chain_bivariate(2, n, m);
    const BiPoly b3 = rising_chain_bivariate(3, n, m);
    if (!(b1 == b2)) detail::append_defect(defect, "bivariate 1-2: " + (b1 - b2).str());
    if (!(b2 == b3)) detail::append_defect(defect, "bivariate 2-3: " + (b2 - b3).str());

    return detail_report(
        "remark62", detail::nm_params(n, m), std::move(defect),
        "exact polynomial chains; bivariate coefficient equality settles all complex (alpha, beta)");
}

// ---------------------------------------------------------------------------
// The alternating double-binomial sum.
// ---------------------------------------------------------------------------

inline void require_k_le_m(Index k, Index m) {
    if (k > m)
        throw precondition_error("k = " + std::to_string(k) + " exceeds m = " + std::to_string(m));
}

/// sum_{nu=k}^{m} (-1)^nu/(nu+n+1) C(m, nu) C(nu, k).
inline Rational remark63_lhs(Index k, Index m, Index n) {
    require_k_le_m(k, m);
    Rational s = 0;
    for (Index nu = k; nu <= m; ++nu)
        s += Rational(Int(detail::sign_pow(nu)) * binomial(m, nu) * binomial(nu, k),
                      Int(nu + n + 1));
    return s;
}

/// (-1)^k/(n+m+1) * C(n+k, k)/C(n+m, m).
inline Rational remark63_rhs(Index k, Index m, Index n) {
    require_k_le_m(k, m);
    return Rational(Int(detail::sign_pow(k)) * binomial(n + k, k),
                    Int(n + m + 1) * binomial(n + m, m));
}

inline CheckReport verify_remark63(Index k, Index m, Index n,
                                   const FaultInjection* fault = nullptr) {
    Rational lhs = remark63_lhs(k, m, n);
    if (fault) lhs += fault->delta;
    return scalar_report("remark63",
                         {{"k", std::to_string(k)},
                          {"m", std::to_string(m)},
                          {"n", std::to_string(n)}},
                         lhs - remark63_rhs(k, m, n), "exact rational evaluation, both sides");
}

// ---------------------------------------------------------------------------
// The twin identity in the rising-factorial basis.
// ---------------------------------------------------------------------------

/// (1-x)^((n+1))/(n+1)! sum_{k<=m} (n+1)/(n+k+1) x^((k))/k!
///   + x^((m+1))/(m+1)! sum_{k<=n} (m+1)/(m+k+1) (1-x)^((k))/k!
/// expanded exactly in the monomial basis; equals 1 when the identity holds.
inline DensePoly twin_combination(Index n, Index m) {
    const DensePoly x = DensePoly::variable();
    const DensePoly omx = DensePoly::one_minus_x();

    DensePoly first_sum;
    for (Index k = 0; k <= m; ++k) {
        Rational c = Rational(Int(n + 1), Int(n + k + 1) * factorial(k));
        first_sum += c * rising_factorial_poly(x, k);
    }
    DensePoly first =
        Rational(Int(1), factorial(n + 1)) * (rising_factorial_poly(omx, n + 1) * first_sum);

    DensePoly second_sum;
    for (Index k = 0; k <= n; ++k) {
        Rational c = Rational(Int(m + 1), Int(m + k + 1) * factorial(k));
        second_sum += c * rising_factorial_poly(omx, k);
    }
    DensePoly second =
        Rational(Int(1), factorial(m + 1)) * (rising_factorial_poly(x, m + 1) * second_sum);

    return first + second;
}

/// The combination must be the constant 1, and re-expressing it in the
/// rising-factorial basis must give the constant-1 coefficient vector too
/// (the verdict is basis-independent).
inline CheckReport verify_twin(Index n, Index m, const FaultInjection* fault = nullptr) {
    DensePoly combo = twin_combination(n, m);
    if (fault) combo.add_to_coeff(fault->index, fault->delta);

    std::string defect;
    DensePoly residual = combo;
    residual.add_to_coeff(0, Rational(-1));
    if (!residual.is_zero()) detail::append_defect(defect, "monomial: " + residual.str());

    DensePoly rising = combo.to_rising_basis();
    DensePoly rising_residual = rising - DensePoly::constant(1, Basis::RisingOverFactorial);
    if (!rising_residual.is_zero())
        detail::append_defect(defect, "rising: " + rising_residual.str());

    return detail_report("twin", detail::nm_params(n, m), std::move(defect),
                         "exact expansion, checked in monomial and rising bases");
}

/// The pre-substitution form:
/// beta^((n+1)) sum_{k<=m} C(n+k,k) alpha^((k))/(alpha+beta)^((n+k+1))
///   + alpha^((m+1)) sum_{k<=n} C(m+k,k) beta^((k))/(alpha+beta)^((m+k+1)) == 1,
/// evaluated exactly in rationals.
inline CheckReport verify_gamma_ratio_form(Index n, Index m, const Rational& alpha,
                                           const Rational& beta,
                                           const FaultInjection* fault = nullptr) {
    const Rational ab = alpha + beta;
    for (Index j = 0; j <= n + m + 1; ++j)
        if (ab + Int(j) == 0)
            throw singular_denominator_error("alpha + beta + " + std::to_string(j) +
                                             " vanishes; the denominators are singular");

    Rational lhs = 0;
    const Rational beta_rise = rising_factorial(beta, n + 1);
    for (Index k = 0; k <= m; ++k)
        lhs += Rational(binomial(n + k, k)) * beta_rise * rising_factorial(alpha, k) /
               rising_factorial(ab, n + k + 1);
    const Rational alpha_rise = rising_factorial(alpha, m + 1);
    for (Index k = 0; k <= n; ++k)
        lhs += Rational(binomial(m + k, k)) * alpha_rise * rising_factorial(beta, k) /
               rising_factorial(ab, m + k + 1);
    if (fault) lhs += fault->delta;

    Params params = detail::nm_params(n, m);
    params.emplace_back("alpha", to_string(alpha));
    params.emplace_back("beta", to_string(beta));
    return scalar_report("gamma-ratio", std::move(params), lhs - 1,
                         "exact rational rising-factorial evaluation");
}

} // namespace chaundy
