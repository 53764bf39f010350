#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chaundy/identities.hpp"
#include "chaundy/special_fn.hpp"
#include "test_support.hpp"

using namespace chaundy;

namespace {

// Independent oracle: expand (1-t)^(q-1) by the binomial theorem and
// integrate termwise, accumulating sum_j (-1)^j C(q-1, j) a^(p+j)/(p+j)
// evaluated directly at a rational point. Deliberately does not reuse the
// library's polynomial type.
Rational ibeta_oracle(Index p, Index q, const Rational& a) {
    Rational total = 0;
    for (Index j = 0; j < q; ++j) {
        Rational term = Rational(binomial(q - 1, j), Int(p + j));
        Rational apow = 1;
        for (Index e = 0; e < p + j; ++e) apow *= a;
        total += (j % 2 == 0 ? term : -term) * apow;
    }
    return total;
}

} // namespace

TEST(IncompleteBetaExact, SmallCases) {
    EXPECT_EQ(incomplete_beta_exact(1, 1), DensePoly({0, 1}));                 // a
    EXPECT_EQ(incomplete_beta_exact(2, 1), DensePoly({0, 0, frac(1, 2)}));     // a^2/2
    EXPECT_EQ(incomplete_beta_exact(2, 2),
              DensePoly({0, 0, frac(1, 2), frac(-1, 3)})); // a^2/2 - a^3/3

    EXPECT_THROW(incomplete_beta_exact(0, 1), nonpositive_parameter_error);
    EXPECT_THROW(incomplete_beta_exact(1, 0), nonpositive_parameter_error);
}

TEST(IncompleteBetaExact, MatchesTermwiseIntegrationOracle) {
    // frozen value from the oracle: B_{1/2}(2,3) = 1/8 - 1/12 + 1/64 = 11/192
    EXPECT_EQ(ibeta_oracle(2, 3, frac(1, 2)), frac(11, 192));
    EXPECT_EQ(incomplete_beta_exact(2, 3).eval(frac(1, 2)), frac(11, 192));

    std::mt19937_64 rng(3);
    for (Index p = 1; p <= 6; ++p)
        for (Index q = 1; q <= 6; ++q)
            for (int trial = 0; trial < 4; ++trial) {
                Rational a(Int(rng() % 100), Int(100));
                EXPECT_EQ(incomplete_beta_exact(p, q).eval(a), ibeta_oracle(p, q, a))
                    << "p=" << p << " q=" << q;
            }
}

TEST(IncompleteBetaExact, CompleteBetaAtOne) {
    // B(p, q) = (p-1)! (q-1)! / (p+q-1)!
    for (Index p = 1; p <= 5; ++p)
        for (Index q = 1; q <= 5; ++q) {
            Rational complete(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1));
            EXPECT_EQ(incomplete_beta_exact(p, q).eval(1), complete);
        }
}

TEST(BetaShiftRatio, ExamplesAndConsistency) {
    EXPECT_EQ(beta_shift_ratio(0, 0, frac(5, 3), frac(1, 7)), 1);
    Rational alpha = frac(5, 3), beta = frac(1, 7);
    EXPECT_EQ(beta_shift_ratio(1, 0, alpha, beta), alpha / (alpha + beta));
    EXPECT_EQ(beta_shift_ratio(2, 1, frac(1, 2), frac(1, 2)), frac(1, 16));

    EXPECT_THROW(beta_shift_ratio(2, 2, frac(1, 2), frac(-5, 2)),
                 singular_denominator_error);

    // B(p+p', q+q') = ratio(p', q', p, q) * B(p, q) with both sides exact
    for (Index p = 1; p <= 5; ++p)
        for (Index q = 1; q <= 5; ++q)
            for (Index dp = 0; dp <= 5; ++dp)
                for (Index dq = 0; dq <= 5; ++dq) {
                    Rational base(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1));
                    Rational shifted(factorial(p + dp - 1) * factorial(q + dq - 1),
                                     factorial(p + dp + q + dq - 1));
                    EXPECT_EQ(beta_shift_ratio(dp, dq, Rational(Int(p)), Rational(Int(q))) * base,
                              shifted);
                }
}

TEST(IncompleteBetaNumeric, TrivialAndExactAgreement) {
    EXPECT_EQ(incomplete_beta_numeric(2.5L, 3.5L, 0.0L), 0.0L);
    EXPECT_NEAR(static_cast<double>(incomplete_beta_numeric(1, 1, 0.73L)), 0.73, 1e-15);

    const Rational a_values[] = {frac(1, 10), frac(1, 3), frac(1, 2), frac(9, 10)};
    for (Index p = 1; p <= 6; ++p)
        for (Index q = 1; q <= 6; ++q) {
            DensePoly exact = incomplete_beta_exact(p, q);
            for (const Rational& ar : a_values) {
                long double want = to_long_double(exact.eval(ar));
                long double got = incomplete_beta_numeric(p, q, to_long_double(ar));
                EXPECT_LE(std::fabs(got - want), 1e-12L)
                    << "p=" << p << " q=" << q << " a=" << to_string(ar);
            }
        }
}

TEST(IncompleteBetaNumeric, SingularEndpointsViaSubstitution) {
    // int_0^(1/2) dt/sqrt(t(1-t)) = 2 asin(sqrt(1/2)) = pi/2
    long double got = incomplete_beta_numeric(0.5L, 0.5L, 0.5L);
    EXPECT_LE(std::fabs(got - std::numbers::pi_v<long double> / 2), 1e-12L);

    // complete beta with both exponents fractional:
    // B(1/2, 1/2) = pi
    got = incomplete_beta_numeric(0.5L, 0.5L, 1.0L);
    EXPECT_LE(std::fabs(got - std::numbers::pi_v<long double>), 1e-12L);

    // B_a(1/2, 1) = 2 sqrt(a)
    got = incomplete_beta_numeric(0.5L, 1.0L, 0.25L);
    EXPECT_LE(std::fabs(got - 1.0L), 1e-12L);

    // near t = 1 only: B_1(2, 1/2) = int_0^1 t/sqrt(1-t) dt = 4/3
    got = incomplete_beta_numeric(2.0L, 0.5L, 1.0L);
    EXPECT_LE(std::fabs(got - 4.0L / 3.0L), 1e-12L);
}

TEST(IncompleteBetaNumeric, DomainAndBudgetErrors) {
    EXPECT_THROW(incomplete_beta_numeric(0, 1, 0.5L), std::domain_error);
    EXPECT_THROW(incomplete_beta_numeric(1, -2, 0.5L), std::domain_error);
    EXPECT_THROW(incomplete_beta_numeric(1, 1, 1.5L), std::domain_error);

    QuadOptions starved;
    starved.max_subdivisions = 2;
    EXPECT_THROW(incomplete_beta_numeric(0.001L, 0.7L, 0.9L, starved), nonconvergence_error);
}

TEST(IncompleteBetaNumeric, MonotoneInUpperLimit) {
    const std::pair<long double, long double> params[] = {
        {0.5L, 2.5L}, {2.0L, 3.0L}, {0.3L, 0.7L}, {1.0L, 1.0L}};
    for (auto [x, y] : params) {
        long double prev = 0;
        for (int i = 1; i <= 50; ++i) {
            long double a = static_cast<long double>(i) / 50;
            long double cur = incomplete_beta_numeric(x, y, a);
            EXPECT_GE(cur, prev - 1e-12L) << "x=" << static_cast<double>(x)
                                          << " y=" << static_cast<double>(y) << " i=" << i;
            prev = cur;
        }
    }
}

TEST(VerifyBetaIdentity, ExactMode) {
    // (0,0, alpha=1, beta=1): B_a(1,2) + B_a(2,1) = a = B_a(1,1)
    auto r = verify_beta_identity(0, 0, Rational(1), Rational(1));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.method, "exact polynomial-in-a expansion");

    EXPECT_TRUE(verify_beta_identity(1, 1, Rational(2), Rational(3)).passed);
    EXPECT_TRUE(verify_beta_identity(3, 2, Rational(5), Rational(4)).passed);

    FaultInjection fault{3, frac(1, 9)};
    auto bad = verify_beta_identity(1, 1, Rational(2), Rational(3), std::nullopt, &fault);
    EXPECT_FALSE(bad.passed);
    EXPECT_NE(bad.residual, "0");
}

TEST(VerifyBetaIdentity, NumericMode) {
    auto r = verify_beta_identity(1, 2, frac(7, 10), frac(19, 10), frac(7, 20));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.residual, "0");

    FaultInjection fault{0, frac(1, 1000)};
    auto bad = verify_beta_identity(1, 2, frac(7, 10), frac(19, 10), frac(7, 20), &fault);
    EXPECT_FALSE(bad.passed);
    EXPECT_NE(bad.residual, "0");
}

TEST(BetaShiftRatio, CompleteBetaFormReproducesRationalIdentity) {
    // Dividing the complete-beta (a = 1) identity through by B(alpha, beta)
    // turns every term into a shift ratio; the resulting sum must be exactly
    // 1 and must agree with the independent rising-factorial route.
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        Rational alpha = testsupport::random_rational(rng, 30, 11, true);
        Rational beta = testsupport::random_rational(rng, 30, 11, true);
        for (Index n = 0; n <= 6; ++n)
            for (Index m = 0; m <= 6; ++m) {
                Rational lhs = 0;
                for (Index k = 0; k <= m; ++k)
                    lhs += Rational(binomial(n + k, k)) *
                           beta_shift_ratio(k, n + 1, alpha, beta);
                for (Index k = 0; k <= n; ++k)
                    lhs += Rational(binomial(m + k, k)) *
                           beta_shift_ratio(m + 1, k, alpha, beta);
                EXPECT_EQ(lhs, 1) << "n=" << n << " m=" << m;
                EXPECT_TRUE(verify_gamma_ratio_form(n, m, alpha, beta).passed);
            }
    }
}

TEST(VerifyBetaIdentity, Preconditions) {
    EXPECT_THROW(verify_beta_identity(1, 1, Rational(0), Rational(1)), std::domain_error);
    EXPECT_THROW(verify_beta_identity(1, 1, Rational(1), frac(-1, 2)), std::domain_error);
    EXPECT_THROW(verify_beta_identity(1, 1, Rational(1), Rational(1), Rational(2)),
                 std::domain_error);
    // numeric mode without an evaluation point is a config problem
    EXPECT_THROW(verify_beta_identity(1, 1, frac(1, 2), Rational(1)), config_error);
}
