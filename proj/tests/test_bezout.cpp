#include <gtest/gtest.h>

#include "chaundy/bezout.hpp"

using namespace chaundy;

TEST(ClosedForm, SmallPairs) {
    auto s00 = closed_form(0, 0);
    EXPECT_EQ(s00.P, DensePoly({1}));
    EXPECT_EQ(s00.Q, DensePoly({1}));

    auto s11 = closed_form(1, 1);
    EXPECT_EQ(s11.P, DensePoly({3, -2}));
    EXPECT_EQ(s11.Q, DensePoly({1, 2}));

    auto s12 = closed_form(1, 2);
    EXPECT_EQ(s12.P, DensePoly({4, -3}));
    EXPECT_EQ(s12.Q, DensePoly({1, 2, 3}));
}

TEST(ClosedForm, DegreeBoundsAndResidual) {
    for (Index n = 0; n <= 20; ++n)
        for (Index m = 0; m <= 20; ++m) {
            auto sol = closed_form(n, m); // also exercises the integrality assertion
            ASSERT_TRUE(sol.P.degree().has_value());
            ASSERT_TRUE(sol.Q.degree().has_value());
            EXPECT_LE(*sol.P.degree(), n);
            EXPECT_LE(*sol.Q.degree(), m);
            EXPECT_TRUE(bezout_residual(sol.P, sol.Q, n, m).is_zero())
                << "n=" << n << " m=" << m;
        }
}

TEST(ClosedFormFactored, MatchesCoefficientForm) {
    auto [p00, q00] = closed_form_factored(0, 0);
    EXPECT_EQ(p00, DensePoly({1}));
    EXPECT_EQ(q00, DensePoly({1}));

    // P_{1,1} = C(3,0) x + C(3,1)(1-x) = 3 - 2x
    auto [p11, q11] = closed_form_factored(1, 1);
    EXPECT_EQ(p11, DensePoly({3, -2}));
    EXPECT_EQ(q11, DensePoly({1, 2}));

    // Q_{1,2} = (1-x)^2 + 4x(1-x) + 6x^2 = 1 + 2x + 3x^2
    auto [p12, q12] = closed_form_factored(1, 2);
    EXPECT_EQ(q12, DensePoly({1, 2, 3}));
    EXPECT_EQ(p12, DensePoly({4, -3}));

    for (Index n = 0; n <= 10; ++n)
        for (Index m = 0; m <= 10; ++m) {
            auto sol = closed_form(n, m);
            auto [pf, qf] = closed_form_factored(n, m);
            EXPECT_EQ(pf, sol.P) << "n=" << n << " m=" << m;
            EXPECT_EQ(qf, sol.Q) << "n=" << n << " m=" << m;
        }
}

TEST(Recurrence, UnrolledExamples) {
    auto s11 = recurrence_solution(1, 1);
    EXPECT_EQ(s11.Q, DensePoly({1, 2}));
    EXPECT_EQ(s11.P, DensePoly({3, -2})); // p_0 = 6/2, p_1 = -6/3 with mu = 6

    // n = 0 freezes the ratio at 1, so Q is all ones
    for (Index m = 0; m <= 6; ++m) {
        auto s = recurrence_solution(0, m);
        EXPECT_EQ(s.Q, DensePoly(std::vector<Rational>(m + 1, Rational(1))));
    }
}

TEST(Mu, ValuesAndQOneCrossCheck) {
    EXPECT_EQ(mu(0, 0), 1);
    EXPECT_EQ(mu(1, 1), 6); // 2 * C(3,1)
    for (Index n = 0; n <= 20; ++n)
        for (Index m = 0; m <= 20; ++m) {
            auto sol = closed_form(n, m);
            // mu = (n+1) Q(1), and Q(1) = C(n+m+1, m)
            EXPECT_EQ(Rational(mu(n, m)), Rational(Int(n + 1)) * sol.Q.eval(1));
            EXPECT_EQ(sol.Q.eval(1), Rational(binomial(n + m + 1, m)));
            // P(0) = (n+m+1)/(m+1) C(n+m, m) = C(n+m+1, m+1)
            EXPECT_EQ(sol.P.eval(0),
                      Rational(Int(n + m + 1) * binomial(n + m, m), Int(m + 1)));
            EXPECT_EQ(sol.P.eval(0), Rational(binomial(n + m + 1, m + 1)));
        }
}

TEST(OdeResiduals, ZeroForValidSolutions) {
    for (Index n = 0; n <= 20; ++n)
        for (Index m = 0; m <= 20; ++m) {
            auto [rq, rp] = ode_residuals(closed_form(n, m));
            EXPECT_TRUE(rq.is_zero()) << "n=" << n << " m=" << m;
            EXPECT_TRUE(rp.is_zero()) << "n=" << n << " m=" << m;
        }
}

TEST(OdeResiduals, CorruptedQIsCaught) {
    auto sol = closed_form(1, 1);
    sol.Q.add_to_coeff(1, 1); // bump q_1
    auto [rq, rp] = ode_residuals(sol);
    EXPECT_FALSE(rq.is_zero());
    // (n+1)(Q + x) - (1-x)(Q + x)' - mu x = 2x - (1-x) + ... nonzero by direct expansion
    EXPECT_EQ(rq, DensePoly({-1, 3}));
    EXPECT_TRUE(rp.is_zero());
}

TEST(ExtendedEuclid, Examples) {
    // x and 1-x: 1*x + 1*(1-x) = 1
    auto [u1, v1, g1] = extended_euclid(DensePoly::variable(), DensePoly::one_minus_x());
    EXPECT_EQ(u1, DensePoly({1}));
    EXPECT_EQ(v1, DensePoly({1}));
    EXPECT_EQ(g1, DensePoly({1}));

    auto [u2, v2, g2] =
        extended_euclid(pow(DensePoly::variable(), 2), pow(DensePoly::one_minus_x(), 2));
    EXPECT_EQ(u2, DensePoly({3, -2}));
    EXPECT_EQ(v2, DensePoly({1, 2}));
    EXPECT_EQ(g2, DensePoly({1}));

    // divisibility case: gcd(x^2, x) = x with cofactors (0, 1)
    auto [u3, v3, g3] = extended_euclid(pow(DensePoly::variable(), 2), DensePoly::variable());
    EXPECT_EQ(g3, DensePoly({0, 1}));
    EXPECT_TRUE(u3.is_zero());
    EXPECT_EQ(v3, DensePoly({1}));
}

TEST(ExtendedEuclid, ContractHolds) {
    // A u + B v = g with the minimal-degree normalization, on assorted pairs
    std::vector<std::pair<DensePoly, DensePoly>> pairs = {
        {DensePoly({1, 0, 2, 1}), DensePoly({-1, 1})},
        {DensePoly({2, 3}), DensePoly({4, 6})}, // proportional: gcd is the monic line
        {DensePoly({0, 0, 1}), DensePoly({0, 0, 0, 5})},
        {DensePoly({1, 1}) * DensePoly({2, -1}), DensePoly({1, 1}) * DensePoly({3, 5, 7})},
    };
    for (const auto& [A, B] : pairs) {
        auto [u, v, g] = extended_euclid(A, B);
        EXPECT_EQ(A * u + B * v, g);
        ASSERT_FALSE(g.is_zero());
        EXPECT_EQ(g.coeff(*g.degree()), 1); // monic
        auto [qa, ra] = divmod(A, g);
        auto [qb, rb] = divmod(B, g);
        EXPECT_TRUE(ra.is_zero());
        EXPECT_TRUE(rb.is_zero());
    }
    EXPECT_THROW(extended_euclid(DensePoly(), DensePoly()), both_zero_error);

    // one-sided zero: gcd is the monic survivor
    auto [u, v, g] = extended_euclid(DensePoly({0, 0, 3}), DensePoly());
    EXPECT_EQ(g, DensePoly({0, 0, 1}));
    EXPECT_EQ(DensePoly({0, 0, 3}) * u, g);
}

TEST(BezoutCrossCheck, FourConstructionsAgree) {
    for (Index n = 0; n <= 8; ++n)
        for (Index m = 0; m <= 8; ++m) {
            auto report = bezout_cross_check(n, m);
            EXPECT_TRUE(report.passed) << "n=" << n << " m=" << m << ": " << report.residual;
            EXPECT_EQ(report.residual, "0");
        }
}

TEST(BezoutCrossCheck, FaultInjectionIsDetected) {
    FaultInjection fault{1, Rational(1)};
    auto report = bezout_cross_check(2, 3, &fault);
    EXPECT_FALSE(report.passed);
    EXPECT_NE(report.residual, "0");
}
