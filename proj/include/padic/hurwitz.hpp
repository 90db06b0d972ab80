#ifndef PADIC_HURWITZ_HPP
#define PADIC_HURWITZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <padic/combinatorics.hpp>
#include <padic/decomposition.hpp>
#include <padic/error.hpp>
#include <padic/number.hpp>
#include <padic/volkenborn.hpp>

// p-adic Hurwitz zeta functions: zeta_p(s, x) for x in Q_p \ Z_p (integral
// and series routes), zeta_p(s, chi, x) for x in Z_p with chi = omega^u,
// the Kubota-Leopoldt values L_p(s, chi) = zeta_p(s, chi, 0), and
// Washington's series H_p(s, a, F).
//
// Arguments s are restricted to Z_p. The natural disc of convergence of the
// series is |s|_p < R_p = p^{(p-2)/(p-1)}, which contains Z_p.

namespace padic
{

enum class Route { integral, series };

/// Highest exponent treated as a polynomial integrand by the integral route.
inline constexpr int max_polynomial_degree = 64;

/// The character omega^u on Z_p, extended by zero on pZ_p.
class TeichCharacter
{
public:
    TeichCharacter(unsigned long p, long u) : p_(p)
    {
        require_odd_prime(p);
        const long order = static_cast<long>(p) - 1;
        u_ = ((u % order) + order) % order;
    }

    unsigned long prime() const noexcept
    {
        return p_;
    }
    /// Exponent u in [0, p - 1).
    long exponent() const noexcept
    {
        return u_;
    }
    bool is_trivial() const noexcept
    {
        return u_ == 0;
    }
    /// chi(-1) = (-1)^u; p - 1 is even so the parity of u is well defined.
    bool is_even() const noexcept
    {
        return u_ % 2 == 0;
    }

    PadicNumber operator()(const PadicNumber &y, int prec) const
    {
        if (y.prime() != p_) {
            throw DomainError("character and argument use different primes");
        }
        if (y.is_inexact_zero() && y.valuation() < 1) {
            throw PrecisionExhausted("character argument is not known modulo p");
        }
        if (y.is_zero() || y.valuation() > 0) {
            return PadicNumber::zero(p_);
        }
        if (y.valuation() < 0) {
            throw DomainError("character argument must lie in Z_p");
        }
        if (u_ == 0) {
            return PadicNumber::one(p_, prec);
        }
        return pow(teichmuller(y, prec), static_cast<unsigned long>(u_));
    }

    PadicNumber operator()(long y, int prec) const
    {
        return (*this)(PadicNumber::from_integer(p_, y, prec), prec);
    }

private:
    unsigned long p_;
    long u_ = 0;
};

namespace detail
{

// s - 1, raising PoleError when it is zero to the known digits.
inline PadicNumber distance_to_pole(const PadicNumber &s, int prec, const char *what)
{
    const PadicNumber d = offset(s, -1, prec);
    if (d.is_zero()) {
        throw PoleError(std::string(what) + " has a pole at s = 1");
    }
    return d;
}

inline void require_outside_zp(const PadicNumber &x, const char *what)
{
    if (x.is_exact_zero() || (!x.is_zero() && x.valuation() >= 0)) {
        throw DomainError(std::string(what) + ": x must lie in Q_p \\ Z_p (|x|_p > 1)");
    }
    if (x.is_inexact_zero()) {
        throw PrecisionExhausted(std::string(what) + ": x is zero to all known digits");
    }
}

inline void require_in_zp(const PadicNumber &x, const char *what)
{
    if (x.is_inexact_zero() && x.valuation() < 0) {
        throw PrecisionExhausted(std::string(what) + ": x is not known to lie in Z_p");
    }
    if (!x.is_zero() && x.valuation() < 0) {
        throw DomainError(std::string(what) + ": x must lie in Z_p");
    }
}

// Smallest non-negative integer representing t when it is at most `limit`.
inline std::optional<int> small_integer_representative(const PadicNumber &t, int limit)
{
    if (t.is_zero()) {
        return t.valuation() >= 0 ? std::optional<int>(0) : std::nullopt;
    }
    if (t.valuation() < 0) {
        return std::nullopt;
    }
    const mpz_class rep = t.unit() * prime_power(t.prime(), t.valuation());
    if (rep > limit) {
        return std::nullopt;
    }
    return static_cast<int>(rep.get_si());
}

inline int resolved_level(const VolkenbornOptions &opts, unsigned long p)
{
    return opts.level == 0 ? default_level(p) : opts.level;
}

// sum_{j=0}^{J} C(t, j) B_j r^j, capped at the tail bound J * v(r) + v(r) - 1
// (C(t, j) is integral and v(B_j) >= -1).
inline PadicNumber bernoulli_binomial_series(const PadicNumber &t, const PadicNumber &ratio, int terms, int prec)
{
    const unsigned long p = t.prime();
    const int vr = ratio.valuation();
    const auto binom = binomial_coefficients(t, terms, prec);
    PadicNumber sum = PadicNumber::zero(p);
    PadicNumber rpow = PadicNumber::one(p, prec);
    for (int j = 0; j <= terms; ++j) {
        const ExactRational b = bernoulli(static_cast<unsigned>(j));
        if (b != 0) {
            sum += binom[static_cast<std::size_t>(j)] * embed_rational(b, p, prec) * rpow;
        }
        rpow *= ratio;
    }
    return cap_absolute(sum, (terms + 1) * vr - 1);
}

} // namespace detail

/// zeta_p(s, x) = 1/(s-1) * Int_{Z_p} omega_v(x+a) <x+a>^{1-s} da for
/// x in Q_p \ Z_p and s in Z_p \ {1}.
///
/// Route::series sums x <x>^{-s}/(s-1) * sum_j C(1-s, j) B_j x^{-j} up to
/// depth ceil((prec + guard + 1) / |v_p(x)|) + guard. Route::integral
/// evaluates the Volkenborn integral, exactly when 1 - s is a small
/// non-negative integer and by level sums otherwise; in the latter case the
/// result carries only the digits confirmed by consecutive levels.
inline PadicNumber zeta_p(const PadicNumber &s, const PadicNumber &x, int prec, Route route = Route::series,
                          const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    detail::require_outside_zp(x, "zeta_p");
    detail::require_integral_exponent(s);
    const unsigned long p = x.prime();
    const int work = prec + opts.guard;
    const PadicNumber s_minus_1 = detail::distance_to_pole(s, work, "zeta_p(s, x)");
    const PadicNumber t = -s_minus_1; // 1 - s

    if (route == Route::series) {
        const int m = -x.valuation();
        const int terms = (work + 1 + m - 1) / m + opts.guard;
        const PadicNumber xinv = PadicNumber::one(p, work) / x;
        const PadicNumber sum = detail::bernoulli_binomial_series(t, xinv, terms, work);
        return truncate(x * angle_pow(x, -s, work, opts.guard) * sum / s_minus_1, prec);
    }

    const int level = detail::resolved_level(opts, p);
    const int inner = prec + 2 * opts.guard + level;
    const PowerKernel kernel(t, inner);
    auto f = [&kernel, x, p](std::int64_t a, int w) {
        const PadicNumber y = x + PadicNumber::from_integer(p, static_cast<long>(a), w);
        return truncate(kernel.table().omega_v(y) * kernel(y), w);
    };
    const auto degree = detail::small_integer_representative(t, max_polynomial_degree);
    const Integrand integrand = degree ? Integrand::polynomial(f, *degree) : Integrand::differentiable(f);
    const VolkenbornResult integral = volkenborn_integral(integrand, p, work, opts);
    return truncate(integral.value / s_minus_1, prec);
}

/// zeta_p(s, chi, x) = 1/(s-1) * Int chi(x+a) <x+a>^{1-s} da for x in Z_p,
/// chi = omega^u. The integrand is zero wherever p | x + a, so <0> is never
/// formed. Evaluated by Volkenborn level sums.
inline PadicNumber zeta_p_chi(const PadicNumber &s, const TeichCharacter &chi, const PadicNumber &x, int prec,
                              const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    if (chi.prime() != x.prime()) {
        throw DomainError("character and argument use different primes");
    }
    detail::require_in_zp(x, "zeta_p_chi");
    detail::require_integral_exponent(s);
    const unsigned long p = x.prime();
    const int work = prec + opts.guard;
    const PadicNumber s_minus_1 = detail::distance_to_pole(s, work, "zeta_p(s, chi, x)");
    const PadicNumber t = -s_minus_1;

    const int level = detail::resolved_level(opts, p);
    const int inner = prec + 2 * opts.guard + level;
    const PowerKernel kernel(t, inner);
    // chi on residues 1..p-1.
    std::vector<mpz_class> chi_values(p);
    const mpz_class &modulus = detail::prime_power(p, inner);
    for (unsigned long r = 1; r < p; ++r) {
        mpz_powm_ui(chi_values[r].get_mpz_t(), kernel.table().rep(mpz_class(r)).get_mpz_t(),
                    static_cast<unsigned long>(chi.exponent()), modulus.get_mpz_t());
    }
    auto f = [&kernel, &chi_values, x, p](std::int64_t a, int w) {
        const PadicNumber y = x + PadicNumber::from_integer(p, static_cast<long>(a), w);
        if (y.is_inexact_zero() && y.valuation() < 1) {
            throw PrecisionExhausted("zeta_p_chi: x + a not known modulo p");
        }
        if (y.is_zero() || y.valuation() > 0) {
            return PadicNumber::zero(p);
        }
        const PadicNumber chi_y =
            PadicNumber::from_unit(p, 0, chi_values[mpz_fdiv_ui(y.unit().get_mpz_t(), p)], w);
        return chi_y * kernel(y);
    };
    const VolkenbornResult integral = volkenborn_integral(Integrand::differentiable(f), p, work, opts);
    return truncate(integral.value / s_minus_1, prec);
}

/// L_p(s, chi) = zeta_p(s, chi, 0).
inline PadicNumber l_p(const PadicNumber &s, const TeichCharacter &chi, int prec, const VolkenbornOptions &opts = {})
{
    return zeta_p_chi(s, chi, PadicNumber::zero(s.prime()), prec, opts);
}

/// H_p(s, a, F) = 1/(s-1) * 1/F * <a>^{1-s} * sum_j C(1-s, j) B_j (F/a)^j for
/// integers 0 < a < F with p | F and p not dividing a.
inline PadicNumber washington_hp(const PadicNumber &s, long a, long F, int prec, int guard = default_guard)
{
    const unsigned long p = s.prime();
    require_odd_prime(p);
    const auto lp = static_cast<long>(p);
    if (!(0 < a && a < F)) {
        throw DomainError("washington_hp needs 0 < a < F");
    }
    if (F % lp != 0) {
        throw DomainError("washington_hp needs p | F");
    }
    if (a % lp == 0) {
        throw DomainError("washington_hp needs p not dividing a");
    }
    detail::require_integral_exponent(s);
    const int work = prec + guard;
    const PadicNumber s_minus_1 = detail::distance_to_pole(s, work, "H_p(s, a, F)");
    const PadicNumber t = -s_minus_1;
    const PadicNumber a_p = PadicNumber::from_integer(p, a, work);
    const PadicNumber f_p = PadicNumber::from_integer(p, F, work);
    const PadicNumber ratio = f_p / a_p;
    const int vr = ratio.valuation();
    const int terms = (work + 1 + vr - 1) / vr + guard;
    const PadicNumber sum = detail::bernoulli_binomial_series(t, ratio, terms, work);
    return truncate(angle_pow(a_p, t, work, guard) * sum / (f_p * s_minus_1), prec);
}

} // namespace padic

#endif
