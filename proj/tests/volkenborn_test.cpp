#include <gtest/gtest.h>

#include <padic/volkenborn.hpp>

#include "oracles.hpp"

using namespace padic;

namespace
{

Integrand monomial(unsigned long p, unsigned n, bool as_polynomial)
{
    auto f = [p, n](std::int64_t a, int w) {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(a), n);
        return PadicNumber::from_integer(p, v, w);
    };
    return as_polynomial ? Integrand::polynomial(f, static_cast<int>(n)) : Integrand::differentiable(f);
}

} // namespace

TEST(Volkenborn, MomentsAreBernoulliNumbers)
{
    for (const unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
        for (unsigned n = 0; n <= 16; ++n) {
            const auto r = volkenborn_integral(monomial(p, n, true), p, 12);
            EXPECT_TRUE(r.exact);
            EXPECT_GE(agreement_valuation(r.value, embed_rational(oracle::bernoulli(n), p, 20)), 11)
                << "p=" << p << " n=" << n;
        }
    }
}

TEST(Volkenborn, LevelSumsApproachTheMoments)
{
    VolkenbornOptions opts;
    opts.level = 6;
    for (const unsigned long p : {3UL, 5UL}) {
        for (unsigned n = 1; n <= 8; ++n) {
            const auto r = volkenborn_integral(monomial(p, n, false), p, 12, opts);
            EXPECT_FALSE(r.exact);
            EXPECT_EQ(r.level, 6);
            const int got = agreement_valuation(r.value, embed_rational(oracle::bernoulli(n), p, 20));
            EXPECT_GE(got, 4) << "p=" << p << " n=" << n;
            // The reported error valuation never overstates the agreement.
            EXPECT_GE(got, std::min(r.error_valuation, r.value.absolute_precision()));
        }
    }
}

TEST(Volkenborn, DeeperLevelsRefine)
{
    const auto f = monomial(5, 3, false);
    const PadicNumber exact = embed_rational(oracle::bernoulli(3), 5, 20);
    int previous = -1000;
    for (int level = 3; level <= 7; ++level) {
        VolkenbornOptions opts;
        opts.level = level;
        const int v = agreement_valuation(volkenborn_integral(f, 5, 12, opts).value, exact);
        EXPECT_GE(v, previous);
        previous = v;
    }
}

TEST(Volkenborn, LinearInTheIntegrand)
{
    const unsigned long p = 5;
    const PadicNumber c = oracle::q(3, 7, p, 16);
    auto f = [p](std::int64_t a, int w) { return PadicNumber::from_integer(p, a * a + 1, w); };
    auto g = [p](std::int64_t a, int w) { return PadicNumber::from_integer(p, 2 * a * a * a - a, w); };
    auto h = [&](std::int64_t a, int w) { return f(a, w) + c * g(a, w); };
    VolkenbornOptions opts;
    opts.level = 5;
    const PadicNumber lhs = volkenborn_integral(Integrand::differentiable(h), p, 12, opts).value;
    const PadicNumber rhs = volkenborn_integral(Integrand::differentiable(f), p, 12, opts).value
                            + c * volkenborn_integral(Integrand::differentiable(g), p, 12, opts).value;
    EXPECT_GE(agreement_valuation(lhs, rhs), std::min(lhs.absolute_precision(), rhs.absolute_precision()));
}

TEST(Volkenborn, ThreadCountDoesNotChangeTheResult)
{
    VolkenbornOptions one;
    one.level = 6;
    one.threads = 1;
    VolkenbornOptions four = one;
    four.threads = 4;
    const auto f = monomial(5, 5, false);
    EXPECT_EQ(volkenborn_integral(f, 5, 12, one).value, volkenborn_integral(f, 5, 12, four).value);
}

TEST(Volkenborn, BudgetIsEnforced)
{
    VolkenbornOptions opts;
    opts.level = 12;
    opts.budget = 1000;
    EXPECT_THROW(volkenborn_integral(monomial(5, 2, false), 5, 8, opts), BudgetExceeded);
}

TEST(Volkenborn, DefaultLevels)
{
    EXPECT_EQ(default_level(3), 8);
    EXPECT_EQ(default_level(5), 8);
    EXPECT_EQ(default_level(7), 7);
    EXPECT_EQ(default_level(11), 5);
    EXPECT_EQ(default_level(101), 2);
}

TEST(Measures, DeltaEvaluatesAtThePoint)
{
    const auto f = monomial(5, 3, false);
    EXPECT_EQ(integrate_measure(f, MeasureSpec::delta(4), 5, 10), PadicNumber::from_integer(5, 64, 10));
}

TEST(Measures, MuMatchesHandRolledSum)
{
    const unsigned long p = 5;
    const auto f = monomial(p, 2, false);
    for (std::uint64_t n = 1; n <= 60; ++n) {
        // sum_{d | n, p does not divide d} d^{-1} d^2 = sigma*_1(n)
        const PadicNumber expected = embed_rational(oracle::divisor_sum(1, n, p), p, 10);
        EXPECT_GE(agreement_valuation(integrate_measure(f, MeasureSpec::mu(n), p, 10), expected), 10) << n;
    }
}

TEST(Measures, LimitModeConvergesToPointEvaluation)
{
    const unsigned long p = 5;
    const auto f = monomial(p, 3, false);
    VolkenbornOptions opts;
    opts.level = 4;
    const PadicNumber exact = integrate_measure(f, MeasureSpec::mu(6), p, 10);
    int previous = -1000;
    for (int radius = 1; radius <= 4; ++radius) {
        const int v = agreement_valuation(integrate_measure_limit(f, MeasureSpec::mu(6), p, radius, 10, opts), exact);
        EXPECT_GE(v, std::min(previous + 1, 10));
        previous = v;
    }
    EXPECT_GE(previous, 3);
}

TEST(Measures, InvalidIndices)
{
    EXPECT_THROW(MeasureSpec::delta(0), DomainError);
    EXPECT_THROW(MeasureSpec::mu(0), DomainError);
}
