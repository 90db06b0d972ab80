#ifndef PADIC_DECOMPOSITION_HPP
#define PADIC_DECOMPOSITION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <padic/error.hpp>
#include <padic/number.hpp>

// The multiplicative decomposition x = p^{v_p(x)} * teichmuller(x) * angle(x)
// of Q_p^x and the power map <x>^s for s in Z_p.

namespace padic
{

inline constexpr int default_guard = 4;

namespace detail
{

inline void require_nonzero(const PadicNumber &x, const char *what)
{
    if (x.is_exact_zero()) {
        throw DomainError(std::string(what) + ": argument is zero");
    }
    if (x.is_inexact_zero()) {
        throw PrecisionExhausted(std::string(what) + ": argument is zero to all known digits (O(p^"
                                 + std::to_string(x.valuation()) + "))");
    }
}

// The (p-1)-th root of unity congruent to u mod p, modulo p^prec, by the
// fixed-point iteration t <- t^p. Each step gains at least one digit.
inline mpz_class teichmuller_unit(const mpz_class &u, unsigned long p, int prec)
{
    const mpz_class &m = prime_power(p, prec);
    mpz_class t = mod(u, m);
    if (mpz_divisible_ui_p(t.get_mpz_t(), p) != 0) {
        throw DomainError("teichmuller: argument is not a unit");
    }
    mpz_class next;
    const int cap = 4 * prec;
    for (int i = 0; i < cap; ++i) {
        mpz_powm_ui(next.get_mpz_t(), t.get_mpz_t(), p, m.get_mpz_t());
        if (next == t) {
            return t;
        }
        t.swap(next);
    }
    throw PrecisionExhausted("teichmuller iteration did not stabilise");
}

inline void require_integral_exponent(const PadicNumber &s)
{
    if (s.is_exact_zero()) {
        return;
    }
    if (s.is_inexact_zero() && s.valuation() < 0) {
        throw PrecisionExhausted("exponent is not known to lie in Z_p");
    }
    if (!s.is_zero() && s.valuation() < 0) {
        throw DomainError("exponent s must lie in Z_p");
    }
}

// s + k with the integer constant carried at least as precisely as s, so the
// shift never costs digits.
inline PadicNumber offset(const PadicNumber &s, long k, int min_prec)
{
    const int known = s.absolute_precision();
    const int digits = known == PadicNumber::infinite ? min_prec : std::max(min_prec, known);
    return s + PadicNumber::from_integer(s.prime(), k, digits);
}

} // namespace detail

/// Teichmuller representative of the unit part of x, to `prec` digits.
/// Only the first digit of x matters, so the result may be asked for at any
/// precision.
inline PadicNumber teichmuller(const PadicNumber &x, int prec)
{
    detail::require_nonzero(x, "teichmuller");
    return PadicNumber::from_unit(x.prime(), 0, detail::teichmuller_unit(x.unit(), x.prime(), prec), prec);
}

inline PadicNumber teichmuller(const PadicNumber &x)
{
    return teichmuller(x, x.precision());
}

/// <x> = p^{-v_p(x)} x / teichmuller(x), a principal unit.
inline PadicNumber angle(const PadicNumber &x)
{
    detail::require_nonzero(x, "angle");
    const unsigned long p = x.prime();
    const int r = x.precision();
    const mpz_class &m = detail::prime_power(p, r);
    mpz_class inv;
    const mpz_class t = detail::teichmuller_unit(x.unit(), p, r);
    mpz_invert(inv.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    return PadicNumber::from_unit(p, 0, x.unit() * inv, r);
}

/// omega_v(x) = x / <x> = p^{v_p(x)} teichmuller(x).
inline PadicNumber omega_v(const PadicNumber &x, int prec)
{
    detail::require_nonzero(x, "omega_v");
    return PadicNumber::from_unit(x.prime(), x.valuation(), detail::teichmuller_unit(x.unit(), x.prime(), prec), prec);
}

inline PadicNumber omega_v(const PadicNumber &x)
{
    return omega_v(x, x.precision());
}

/// C(t, 0), ..., C(t, count) for t in Q_p, built by c_j = c_{j-1} (t - j + 1) / j.
inline std::vector<PadicNumber> binomial_coefficients(const PadicNumber &t, int count, int prec)
{
    const unsigned long p = t.prime();
    std::vector<PadicNumber> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(PadicNumber::one(p, prec));
    for (int j = 1; j <= count; ++j) {
        const PadicNumber factor = t - PadicNumber::from_integer(p, static_cast<long>(j - 1), prec);
        out.push_back(out.back() * factor / PadicNumber::from_integer(p, static_cast<long>(j), prec));
    }
    return out;
}

/// <x>^s = sum_n C(s, n) (<x> - 1)^n for s in Z_p, to `prec` digits.
///
/// C(s, n) lies in Z_p and v(<x> - 1) >= 1, so term n has valuation at least
/// n * v(<x> - 1); the sum stops once that bound passes prec + guard.
inline PadicNumber angle_pow(const PadicNumber &x, const PadicNumber &s, int prec, int guard = default_guard)
{
    detail::require_nonzero(x, "angle_pow");
    detail::check_same_prime(x, s);
    detail::require_integral_exponent(s);
    const unsigned long p = x.prime();
    const int work = prec + guard;
    if (s.is_exact_zero()) {
        return PadicNumber::one(p, prec);
    }
    const PadicNumber one = PadicNumber::one(p, work);
    const PadicNumber z = truncate(angle(x), work) - one;
    if (z.is_zero()) {
        return truncate(cap_absolute(one, z.absolute_precision()), prec);
    }
    const int vz = z.valuation();
    const int terms = (work + vz - 1) / vz;

    PadicNumber sum = one;
    PadicNumber coeff = one;
    PadicNumber zpow = one;
    for (int n = 1; n <= terms; ++n) {
        coeff = coeff * (s - PadicNumber::from_integer(p, static_cast<long>(n - 1), work))
                / PadicNumber::from_integer(p, static_cast<long>(n), work);
        zpow = zpow * z;
        sum += coeff * zpow;
    }
    sum = cap_absolute(sum, (terms + 1) * vz);
    return truncate(sum, prec);
}

/// Teichmuller representatives of 1, ..., p-1 and their inverses at a fixed
/// precision, for evaluating many points that share one prime.
class TeichmullerTable
{
public:
    TeichmullerTable(unsigned long p, int prec) : p_(p), prec_(prec)
    {
        reps_.resize(p);
        inverses_.resize(p);
        const mpz_class &m = detail::prime_power(p, prec);
        for (unsigned long r = 1; r < p; ++r) {
            reps_[r] = detail::teichmuller_unit(mpz_class(r), p, prec);
            mpz_invert(inverses_[r].get_mpz_t(), reps_[r].get_mpz_t(), m.get_mpz_t());
        }
    }

    unsigned long prime() const noexcept
    {
        return p_;
    }
    int precision() const noexcept
    {
        return prec_;
    }

    /// Representative for a unit u (only u mod p is read).
    const mpz_class &rep(const mpz_class &u) const
    {
        return reps_[mpz_fdiv_ui(u.get_mpz_t(), p_)];
    }
    const mpz_class &inverse(const mpz_class &u) const
    {
        return inverses_[mpz_fdiv_ui(u.get_mpz_t(), p_)];
    }

    PadicNumber omega_v(const PadicNumber &x) const
    {
        detail::require_nonzero(x, "omega_v");
        return PadicNumber::from_unit(p_, x.valuation(), rep(x.unit()), prec_);
    }

private:
    unsigned long p_;
    int prec_;
    std::vector<mpz_class> reps_;
    std::vector<mpz_class> inverses_;
};

/// Evaluates y -> <y>^s by modular exponentiation.
///
/// If s = s0 mod p^A with s0 a non-negative integer, then <y>^s = <y>^{s0}
/// mod p^{A+1}, because <y>^{p^A} = 1 mod p^{A+1}. This is the summation
/// kernel used inside Volkenborn sums, where angle_pow would dominate.
class PowerKernel
{
public:
    PowerKernel(const PadicNumber &s, int prec) : table_(s.prime(), prec)
    {
        detail::require_integral_exponent(s);
        const unsigned long p = s.prime();
        const int known = s.absolute_precision();
        const int digits = std::min(known, prec);
        limit_ = known == PadicNumber::infinite ? prec : std::min(prec, known + 1);
        if (!s.is_zero()) {
            exponent_ = detail::mod(s.unit() * detail::prime_power(p, s.valuation()), detail::prime_power(p, digits));
        }
    }

    const TeichmullerTable &table() const noexcept
    {
        return table_;
    }

    /// The integer representative of s that is actually used.
    const mpz_class &exponent() const noexcept
    {
        return exponent_;
    }

    PadicNumber operator()(const PadicNumber &y) const
    {
        detail::require_nonzero(y, "angle_pow");
        const unsigned long p = table_.prime();
        const int r = std::min(limit_, y.precision());
        const mpz_class &m = detail::prime_power(p, r);
        mpz_class base = y.unit() * table_.inverse(y.unit());
        mpz_class out;
        mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent_.get_mpz_t(), m.get_mpz_t());
        return PadicNumber::from_unit(p, 0, out, r);
    }

private:
    TeichmullerTable table_;
    mpz_class exponent_ = 0;
    int limit_ = 0;
};

} // namespace padic

#endif
