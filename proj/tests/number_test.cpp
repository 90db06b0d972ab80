#include <gtest/gtest.h>

#include <random>

#include <padic/decomposition.hpp>
#include <padic/number.hpp>

#include "oracles.hpp"

using namespace padic;
using oracle::q;

TEST(PadicNumber, EmbedsMinusOneHalfAsRepeatingTwos)
{
    const PadicNumber x = q(-1, 2, 5, 4);
    EXPECT_EQ(x.valuation(), 0);
    EXPECT_EQ(x.digits(), (std::vector<unsigned long>{2, 2, 2, 2}));
}

TEST(PadicNumber, EmbedsNegativeValuation)
{
    const PadicNumber x = q(3, 25, 5, 6);
    EXPECT_EQ(x.valuation(), -2);
    EXPECT_EQ(x.precision(), 6);
    EXPECT_EQ(x.absolute_precision(), 4);
    EXPECT_EQ(x.digits().front(), 3U);
}

TEST(PadicNumber, SumOfOppositesIsZeroToWorkingPrecision)
{
    const PadicNumber one = PadicNumber::one(5, 10);
    const PadicNumber z = one + (-one);
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.is_inexact_zero());
    EXPECT_EQ(z.absolute_precision(), 10);
}

TEST(PadicNumber, ExactZeroIsAdditiveIdentity)
{
    const PadicNumber x = q(7, 3, 5, 8);
    EXPECT_EQ(x + PadicNumber::zero(5), x);
    EXPECT_TRUE((x * PadicNumber::zero(5)).is_exact_zero());
}

TEST(PadicNumber, DivisionErrors)
{
    const PadicNumber x = q(7, 3, 5, 8);
    EXPECT_THROW(x / PadicNumber::zero(5), DivisionByZero);
    EXPECT_THROW(x / PadicNumber::zero_to(5, 4), PrecisionExhausted);
}

TEST(PadicNumber, MismatchedPrimesAreRejected)
{
    EXPECT_THROW(q(1, 2, 5, 4) + q(1, 2, 7, 4), DomainError);
}

TEST(PadicNumber, RejectsEvenOrCompositeModulus)
{
    EXPECT_THROW(embed_rational(1, 2, 4), DomainError);
    EXPECT_THROW(embed_rational(1, 9, 4), DomainError);
}

TEST(PadicNumber, PrecisionPropagation)
{
    const PadicNumber a = PadicNumber::from_unit(5, 0, 7, 4);
    const PadicNumber b = PadicNumber::from_unit(5, 1, 3, 8);
    EXPECT_EQ((a + b).absolute_precision(), 4);
    EXPECT_EQ((a * b).precision(), 4);
    EXPECT_EQ((a * b).valuation(), 1);
}

TEST(PadicNumber, ZeroToTheZeroIsRejected)
{
    EXPECT_THROW(pow(PadicNumber::zero(5), 0), DomainError);
    EXPECT_EQ(pow(q(2, 1, 5, 6), 3), q(8, 1, 5, 6));
}

TEST(PadicNumber, FieldAxiomsOnRandomRationals)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (const unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
        for (int trial = 0; trial < 50; ++trial) {
            long n1 = dist(rng), d1 = dist(rng), n2 = dist(rng), d2 = dist(rng);
            if (d1 == 0 || d2 == 0 || n1 == 0 || n2 == 0) {
                continue;
            }
            const mpq_class r1 = make_rational(n1, d1);
            const mpq_class r2 = make_rational(n2, d2);
            const int prec = 16;
            const PadicNumber a = embed_rational(r1, p, prec);
            const PadicNumber b = embed_rational(r2, p, prec);
            // Operations on embeddings agree with embeddings of exact results
            // on every digit both sides know.
            const auto check = [&](const PadicNumber &got, const mpq_class &want) {
                if (want == 0) {
                    EXPECT_TRUE(got.is_zero());
                    return;
                }
                const PadicNumber ref = embed_rational(want, p, 40);
                EXPECT_GE(agreement_valuation(got, ref), got.absolute_precision());
            };
            check(a + b, r1 + r2);
            check(a - b, r1 - r2);
            check(a * b, r1 * r2);
            check(a / b, r1 / r2);
            EXPECT_EQ(rational_valuation(r1 * r2, p), (a * b).valuation());
        }
    }
}

TEST(Decomposition, TeichmullerOfTwoModTwentyFive)
{
    const PadicNumber t = teichmuller(q(2, 1, 5, 2), 2);
    EXPECT_EQ(t.unit(), 7);
}

TEST(Decomposition, AngleOfTwoModTwentyFive)
{
    const PadicNumber a = angle(q(2, 1, 5, 2));
    EXPECT_EQ(a.unit(), 11);
}

TEST(Decomposition, TeichmullerMatchesPowerOracle)
{
    for (const unsigned long p : {3UL, 5UL, 7UL, 13UL}) {
        const int prec = 15;
        for (unsigned long u = 1; u < 3 * p; ++u) {
            if (u % p == 0) {
                continue;
            }
            const PadicNumber t = teichmuller(PadicNumber::from_integer(p, static_cast<long>(u), prec), prec);
            EXPECT_EQ(t.unit(), oracle::teichmuller(u, p, prec)) << "p=" << p << " u=" << u;
            // t^(p-1) = 1
            EXPECT_TRUE(agrees(pow(t, p - 1), PadicNumber::one(p, prec)));
        }
    }
}

TEST(Decomposition, ProductRecoversInput)
{
    for (const auto &[a, b] : std::vector<std::pair<long, long>>{{6, 5}, {-7, 25}, {3, 1}, {125, 2}, {1, 5}}) {
        const PadicNumber x = q(a, b, 5, 14);
        EXPECT_TRUE(agrees(omega_v(x) * angle(x), x)) << a << "/" << b;
        const PadicNumber z = angle(x) - PadicNumber::one(5, 14);
        EXPECT_TRUE(z.is_zero() || z.valuation() >= 1);
    }
}

TEST(Decomposition, TeichmullerDependsOnlyOnFirstDigit)
{
    const PadicNumber a = teichmuller(q(3, 1, 7, 10), 10);
    const PadicNumber b = teichmuller(q(3 + 7 * 11, 1, 7, 10), 10);
    EXPECT_EQ(a, b);
}

TEST(Decomposition, AnglePowAtIntegersMatchesRepeatedProduct)
{
    const PadicNumber x = q(13, 5, 5, 20);
    for (long s = 0; s <= 6; ++s) {
        const PadicNumber series = angle_pow(x, PadicNumber::from_integer(5, s, 20), 14);
        const PadicNumber product = s == 0 ? PadicNumber::one(5, 14) : pow(angle(x), static_cast<unsigned long>(s));
        EXPECT_GE(agreement_valuation(series, product), 14) << s;
    }
}

TEST(Decomposition, AnglePowIsMultiplicativeInExponent)
{
    const PadicNumber x = q(7, 3, 5, 20);
    const PadicNumber s = q(2, 7, 5, 20);
    const PadicNumber t = q(-5, 11, 5, 20);
    const PadicNumber lhs = angle_pow(x, s + t, 14);
    const PadicNumber rhs = angle_pow(x, s, 14) * angle_pow(x, t, 14);
    EXPECT_GE(agreement_valuation(lhs, rhs), 14);
}

TEST(Decomposition, PowerKernelMatchesSeries)
{
    for (const unsigned long p : {3UL, 5UL, 7UL}) {
        const PadicNumber s = q(-4, 11, p, 18);
        const PowerKernel kernel(s, 12);
        for (long a = 1; a < 40; ++a) {
            if (a % static_cast<long>(p) == 0) {
                continue;
            }
            const PadicNumber y = q(a, static_cast<long>(p), p, 18);
            EXPECT_GE(agreement_valuation(kernel(y), angle_pow(y, s, 12)), 12) << "p=" << p << " a=" << a;
        }
    }
}

TEST(Decomposition, RejectsExponentOutsideZp)
{
    EXPECT_THROW(angle_pow(q(2, 1, 5, 8), q(1, 5, 5, 8), 8), DomainError);
    EXPECT_THROW(angle(PadicNumber::zero(5)), DomainError);
    EXPECT_THROW(angle(PadicNumber::zero_to(5, 3)), PrecisionExhausted);
}
