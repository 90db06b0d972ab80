#include <gtest/gtest.h>

#include <numeric>

#include <padic/combinatorics.hpp>

#include "oracles.hpp"

using namespace padic;

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    for (unsigned n = 0; n <= 40; ++n) {
        EXPECT_EQ(bernoulli(n), oracle::bernoulli(n)) << n;
    }
}

TEST(Bernoulli, KnownValues)
{
    EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
    EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
    EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
    EXPECT_EQ(bernoulli(13), 0);
}

TEST(Bernoulli, ExtendsPastTheMemoisedRange)
{
    EXPECT_EQ(bernoulli(70), oracle::bernoulli(70));
}

TEST(Bernoulli, VonStaudtClausenDenominators)
{
    // The denominator of B_{2k} is the product of primes q with (q - 1) | 2k.
    for (unsigned k = 1; k <= 20; ++k) {
        mpz_class expected = 1;
        for (unsigned long q = 2; q <= 2 * k + 1; ++q) {
            if (is_odd_prime(q) || q == 2) {
                if ((2 * k) % (q - 1) == 0) {
                    expected *= q;
                }
            }
        }
        EXPECT_EQ(bernoulli(2 * k).get_den(), expected) << 2 * k;
    }
}

TEST(BernoulliPolynomial, KnownValues)
{
    EXPECT_EQ(bernoulli_poly(3, make_rational(1, 5)), make_rational(6, 125));
    EXPECT_EQ(bernoulli_poly(2, 0), make_rational(1, 6));
    for (unsigned k = 0; k <= 12; ++k) {
        EXPECT_EQ(bernoulli_poly(k, make_rational(2, 7)), oracle::bernoulli_poly(k, make_rational(2, 7)));
    }
}

TEST(BernoulliPolynomial, DifferenceEquation)
{
    // B_k(x + 1) - B_k(x) = k x^{k-1}
    const ExactRational x = make_rational(-3, 11);
    for (unsigned k = 1; k <= 10; ++k) {
        ExactRational xp = 1;
        for (unsigned i = 1; i < k; ++i) {
            xp *= x;
        }
        EXPECT_EQ(bernoulli_poly(k, x + 1) - bernoulli_poly(k, x), ExactRational(k) * xp);
    }
}

TEST(Divisors, SortedAndComplete)
{
    EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
    EXPECT_THROW(divisors(0), DomainError);
}

TEST(DivisorSums, KnownValues)
{
    EXPECT_EQ(sigma(3, 2), 9);
    EXPECT_EQ(sigma(5, 2), 33);
    EXPECT_EQ(sigma_star(1, 10, 5), 3);
    EXPECT_EQ(sigma_star(-1, 12, 5), oracle::divisor_sum(-1, 12, 5));
    EXPECT_EQ(sigma_star(7, 5, 5), 1);
}

TEST(DivisorSums, MatchBruteForce)
{
    for (long k = -3; k <= 5; ++k) {
        for (std::uint64_t n = 1; n <= 60; ++n) {
            EXPECT_EQ(sigma(k, n), oracle::divisor_sum(k, n));
            EXPECT_EQ(sigma_star(k, n, 5), oracle::divisor_sum(k, n, 5));
        }
    }
}

TEST(DivisorSums, Multiplicative)
{
    for (std::uint64_t m = 1; m <= 20; ++m) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            if (std::gcd(m, n) == 1) {
                EXPECT_EQ(sigma(3, m * n), sigma(3, m) * sigma(3, n));
            }
        }
    }
}

TEST(DivisorSums, StarIgnoresPowersOfP)
{
    for (std::uint64_t n = 1; n <= 30; ++n) {
        if (n % 7 != 0) {
            EXPECT_EQ(sigma_star(2, 7 * n, 7), sigma_star(2, n, 7));
            EXPECT_EQ(sigma_star(2, 49 * n, 7), sigma_star(2, n, 7));
        }
    }
}
