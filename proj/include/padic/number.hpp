#ifndef PADIC_NUMBER_HPP
#define PADIC_NUMBER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <padic/error.hpp>

namespace padic
{

/// Arbitrary-precision fraction. GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation; values built from
/// a raw numerator/denominator pair go through make_rational().
using ExactRational = mpq_class;

inline ExactRational make_rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_odd_prime(unsigned long p) noexcept
{
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (unsigned long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

inline void require_odd_prime(unsigned long p)
{
    if (!is_odd_prime(p)) {
        throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
    }
}

namespace detail
{

// p^k for k >= 0, cached per thread. References stay valid: the map is
// node-based and deque::push_back never moves existing elements.
inline const mpz_class &prime_power(unsigned long p, int k)
{
    thread_local std::unordered_map<unsigned long, std::deque<mpz_class>> cache;
    auto &powers = cache[p];
    if (powers.empty()) {
        powers.emplace_back(1);
    }
    while (static_cast<int>(powers.size()) <= k) {
        powers.emplace_back(powers.back() * p);
    }
    return powers[static_cast<std::size_t>(k)];
}

// Non-negative residue of a modulo m.
inline mpz_class mod(const mpz_class &a, const mpz_class &m)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Strips every factor p from a nonzero n and returns how many were removed.
inline int remove_p(mpz_class &n, unsigned long p)
{
    const mpz_class pz(p);
    return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace detail

/// An element of Q_p known to finite precision, stored as
/// p^valuation * unit with the unit known modulo p^precision.
///
/// Three states exist: the exact zero, a zero known only modulo p^k (the
/// result of total cancellation), and an ordinary value. The absolute
/// precision of a value is valuation + precision.
class PadicNumber
{
public:
    static constexpr int infinite = std::numeric_limits<int>::max();

    enum class Kind : std::uint8_t { exact_zero, inexact_zero, value };

    static PadicNumber zero(unsigned long p)
    {
        PadicNumber z;
        z.p_ = p;
        return z;
    }

    /// Zero known modulo p^absolute_precision.
    static PadicNumber zero_to(unsigned long p, int absolute_precision)
    {
        if (absolute_precision == infinite) {
            return zero(p);
        }
        PadicNumber z;
        z.p_ = p;
        z.kind_ = Kind::inexact_zero;
        z.val_ = absolute_precision;
        return z;
    }

    /// p^valuation * unit modulo p^(valuation + precision). The unit may be
    /// any integer; factors of p are moved into the valuation.
    static PadicNumber from_unit(unsigned long p, int valuation, const mpz_class &unit, int precision)
    {
        if (precision <= 0) {
            return zero_to(p, valuation + precision);
        }
        mpz_class u = detail::mod(unit, detail::prime_power(p, precision));
        if (u == 0) {
            return zero_to(p, valuation + precision);
        }
        const int k = detail::remove_p(u, p);
        PadicNumber x;
        x.p_ = p;
        x.kind_ = Kind::value;
        x.val_ = valuation + k;
        x.prec_ = precision - k;
        x.unit_ = std::move(u);
        return x;
    }

    /// The integer n with `precision` significant digits.
    static PadicNumber from_integer(unsigned long p, const mpz_class &n, int precision)
    {
        if (n == 0) {
            return zero(p);
        }
        mpz_class u = n;
        const int k = detail::remove_p(u, p);
        return from_unit(p, k, u, precision);
    }

    static PadicNumber from_integer(unsigned long p, long n, int precision)
    {
        return from_integer(p, mpz_class(n), precision);
    }

    static PadicNumber one(unsigned long p, int precision)
    {
        return from_unit(p, 0, 1, precision);
    }

    unsigned long prime() const noexcept
    {
        return p_;
    }
    Kind kind() const noexcept
    {
        return kind_;
    }
    bool is_zero() const noexcept
    {
        return kind_ != Kind::value;
    }
    bool is_exact_zero() const noexcept
    {
        return kind_ == Kind::exact_zero;
    }
    bool is_inexact_zero() const noexcept
    {
        return kind_ == Kind::inexact_zero;
    }

    /// v_p(x). For the exact zero this is `infinite`; for a zero known
    /// modulo p^k it is the lower bound k.
    int valuation() const noexcept
    {
        return kind_ == Kind::exact_zero ? infinite : val_;
    }

    /// Number of known unit digits (0 for zeros).
    int precision() const noexcept
    {
        return kind_ == Kind::value ? prec_ : 0;
    }

    int absolute_precision() const noexcept
    {
        switch (kind_) {
            case Kind::exact_zero:
                return infinite;
            case Kind::inexact_zero:
                return val_;
            default:
                return val_ + prec_;
        }
    }

    /// Unit part in [0, p^precision); zero for zeros.
    const mpz_class &unit() const noexcept
    {
        return unit_;
    }

    /// Base-p digits of the unit, least significant first.
    std::vector<unsigned long> digits() const
    {
        std::vector<unsigned long> out;
        if (kind_ != Kind::value) {
            return out;
        }
        out.reserve(static_cast<std::size_t>(prec_));
        mpz_class u = unit_;
        for (int i = 0; i < prec_; ++i) {
            out.push_back(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), p_));
        }
        return out;
    }

    friend bool operator==(const PadicNumber &a, const PadicNumber &b)
    {
        return a.p_ == b.p_ && a.kind_ == b.kind_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.unit_ == b.unit_;
    }

private:
    PadicNumber() = default;

    unsigned long p_ = 0;
    Kind kind_ = Kind::exact_zero;
    int val_ = 0;
    int prec_ = 0;
    mpz_class unit_;
};

namespace detail
{

inline void check_same_prime(const PadicNumber &a, const PadicNumber &b)
{
    if (a.prime() != b.prime()) {
        throw DomainError("mismatched primes " + std::to_string(a.prime()) + " and " + std::to_string(b.prime()));
    }
}

} // namespace detail

/// Forgets every digit at or above p^absolute_precision.
inline PadicNumber cap_absolute(const PadicNumber &x, int absolute_precision)
{
    if (absolute_precision >= x.absolute_precision()) {
        return x;
    }
    if (x.is_zero() || absolute_precision <= x.valuation()) {
        return PadicNumber::zero_to(x.prime(), absolute_precision);
    }
    return PadicNumber::from_unit(x.prime(), x.valuation(), x.unit(), absolute_precision - x.valuation());
}

/// Keeps at most `precision` unit digits.
inline PadicNumber truncate(const PadicNumber &x, int precision)
{
    if (x.is_zero() || precision >= x.precision()) {
        return x;
    }
    return PadicNumber::from_unit(x.prime(), x.valuation(), x.unit(), precision);
}

inline PadicNumber operator-(const PadicNumber &x)
{
    if (x.is_zero()) {
        return x;
    }
    return PadicNumber::from_unit(x.prime(), x.valuation(), -x.unit(), x.precision());
}

inline PadicNumber operator+(const PadicNumber &a, const PadicNumber &b)
{
    detail::check_same_prime(a, b);
    if (a.is_exact_zero()) {
        return b;
    }
    if (b.is_exact_zero()) {
        return a;
    }
    const unsigned long p = a.prime();
    const int abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    const bool a_counts = !a.is_zero() && a.valuation() < abs_prec;
    const bool b_counts = !b.is_zero() && b.valuation() < abs_prec;
    if (!a_counts && !b_counts) {
        return PadicNumber::zero_to(p, abs_prec);
    }
    if (!a_counts) {
        return cap_absolute(b, abs_prec);
    }
    if (!b_counts) {
        return cap_absolute(a, abs_prec);
    }
    const int vmin = std::min(a.valuation(), b.valuation());
    mpz_class n = a.unit() * detail::prime_power(p, a.valuation() - vmin)
                  + b.unit() * detail::prime_power(p, b.valuation() - vmin);
    // from_unit reduces, detects total cancellation and renormalises.
    return PadicNumber::from_unit(p, vmin, n, abs_prec - vmin);
}

inline PadicNumber operator-(const PadicNumber &a, const PadicNumber &b)
{
    return a + (-b);
}

inline PadicNumber operator*(const PadicNumber &a, const PadicNumber &b)
{
    detail::check_same_prime(a, b);
    const unsigned long p = a.prime();
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return PadicNumber::zero(p);
    }
    if (a.is_zero() || b.is_zero()) {
        return PadicNumber::zero_to(p, a.valuation() + b.valuation());
    }
    return PadicNumber::from_unit(p, a.valuation() + b.valuation(), a.unit() * b.unit(),
                                  std::min(a.precision(), b.precision()));
}

inline PadicNumber operator/(const PadicNumber &a, const PadicNumber &b)
{
    detail::check_same_prime(a, b);
    const unsigned long p = a.prime();
    if (b.is_exact_zero()) {
        throw DivisionByZero("p-adic division by exact zero");
    }
    if (b.is_inexact_zero()) {
        throw PrecisionExhausted("p-adic division by a zero known only modulo p^" + std::to_string(b.valuation()));
    }
    if (a.is_exact_zero()) {
        return a;
    }
    if (a.is_inexact_zero()) {
        return PadicNumber::zero_to(p, a.valuation() - b.valuation());
    }
    const int r = std::min(a.precision(), b.precision());
    const mpz_class &m = detail::prime_power(p, r);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.unit().get_mpz_t(), m.get_mpz_t());
    return PadicNumber::from_unit(p, a.valuation() - b.valuation(), a.unit() * inv, r);
}

inline PadicNumber &operator+=(PadicNumber &a, const PadicNumber &b)
{
    return a = a + b;
}
inline PadicNumber &operator-=(PadicNumber &a, const PadicNumber &b)
{
    return a = a - b;
}
inline PadicNumber &operator*=(PadicNumber &a, const PadicNumber &b)
{
    return a = a * b;
}
inline PadicNumber &operator/=(PadicNumber &a, const PadicNumber &b)
{
    return a = a / b;
}

inline PadicNumber pow(const PadicNumber &x, unsigned long n)
{
    const unsigned long p = x.prime();
    if (n == 0) {
        if (x.is_zero()) {
            throw DomainError("0^0 is left undefined");
        }
        return PadicNumber::one(p, x.precision());
    }
    if (x.is_exact_zero()) {
        return x;
    }
    if (x.is_inexact_zero()) {
        return PadicNumber::zero_to(p, static_cast<int>(n) * x.valuation());
    }
    mpz_class u;
    mpz_powm_ui(u.get_mpz_t(), x.unit().get_mpz_t(), n, detail::prime_power(p, x.precision()).get_mpz_t());
    return PadicNumber::from_unit(p, static_cast<int>(n) * x.valuation(), u, x.precision());
}

/// v_p(a - b): `infinite` when the difference is exactly zero, the absolute
/// precision when the difference is zero to the known digits.
inline int agreement_valuation(const PadicNumber &a, const PadicNumber &b)
{
    return (a - b).valuation();
}

/// True when a and b agree on every digit both of them know.
inline bool agrees(const PadicNumber &a, const PadicNumber &b)
{
    return (a - b).is_zero();
}

/// v_p of a nonzero rational.
inline int rational_valuation(const ExactRational &r, unsigned long p)
{
    if (r == 0) {
        return PadicNumber::infinite;
    }
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    return detail::remove_p(num, p) - detail::remove_p(den, p);
}

/// r as an element of Q_p with `precision` correct unit digits.
inline PadicNumber embed_rational(const ExactRational &r, unsigned long p, int precision)
{
    require_odd_prime(p);
    if (precision < 1) {
        throw DomainError("embedding precision must be positive");
    }
    if (r == 0) {
        return PadicNumber::zero(p);
    }
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    const int v = detail::remove_p(num, p) - detail::remove_p(den, p);
    const mpz_class &m = detail::prime_power(p, precision);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    return PadicNumber::from_unit(p, v, num * inv, precision);
}

inline PadicNumber embed_integer(long n, unsigned long p, int precision)
{
    return embed_rational(ExactRational(n), p, precision);
}

} // namespace padic

#endif
