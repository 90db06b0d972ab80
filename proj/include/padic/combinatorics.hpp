#ifndef PADIC_COMBINATORICS_HPP
#define PADIC_COMBINATORICS_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include <padic/error.hpp>
#include <padic/number.hpp>

namespace padic
{

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace detail
{

class BernoulliTable
{
public:
    static BernoulliTable &instance()
    {
        static BernoulliTable table;
        return table;
    }

    ExactRational get(unsigned j)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(j);
        return values_[j];
    }

private:
    BernoulliTable()
    {
        values_.reserve(65);
        values_.emplace_back(1);
        extend(64);
    }

    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    void extend(unsigned j)
    {
        while (values_.size() <= j) {
            const auto n = static_cast<unsigned long>(values_.size());
            ExactRational acc = 0;
            for (unsigned long k = 0; k < n; ++k) {
                acc += ExactRational(binomial(n + 1, k)) * values_[k];
            }
            values_.push_back(-acc / ExactRational(mpz_class(n + 1)));
        }
    }

    std::mutex mutex_;
    std::vector<ExactRational> values_;
};

} // namespace detail

/// B_j with B_1 = -1/2.
inline ExactRational bernoulli(unsigned j)
{
    return detail::BernoulliTable::instance().get(j);
}

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
inline ExactRational bernoulli_poly(unsigned k, const ExactRational &x)
{
    ExactRational acc = 0;
    ExactRational xpow = 1;
    for (unsigned i = 0; i <= k; ++i) {
        const unsigned j = k - i;
        acc += ExactRational(binomial(k, j)) * bernoulli(j) * xpow;
        xpow *= x;
    }
    return acc;
}

/// Positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("divisors of 0 are not defined");
    }
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail
{

inline ExactRational signed_power(std::uint64_t d, long k)
{
    mpz_class base(static_cast<unsigned long>(d));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k < 0) {
        return make_rational(1, out);
    }
    return ExactRational(out);
}

inline ExactRational divisor_power_sum(long k, std::uint64_t n, std::optional<unsigned long> prime_to)
{
    if (n == 0) {
        throw DomainError("divisor sums need n >= 1");
    }
    ExactRational acc = 0;
    for (const auto d : divisors(n)) {
        if (prime_to && d % *prime_to == 0) {
            continue;
        }
        acc += signed_power(d, k);
    }
    return acc;
}

} // namespace detail

/// sigma_k(n) = sum_{d | n} d^k, with k allowed to be negative.
inline ExactRational sigma(long k, std::uint64_t n)
{
    return detail::divisor_power_sum(k, n, std::nullopt);
}

/// sigma*_k(n) = sum_{d | n, p does not divide d} d^k.
inline ExactRational sigma_star(long k, std::uint64_t n, unsigned long p)
{
    return detail::divisor_power_sum(k, n, p);
}

} // namespace padic

#endif
