#ifndef PADIC_EISENSTEIN_HPP
#define PADIC_EISENSTEIN_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <padic/combinatorics.hpp>
#include <padic/decomposition.hpp>
#include <padic/error.hpp>
#include <padic/hurwitz.hpp>
#include <padic/number.hpp>
#include <padic/qseries.hpp>
#include <padic/volkenborn.hpp>

// Coefficients of the p-adic Eisenstein families G*(s, x) and G*(s, chi, x),
// Serre's family G*_{s,u}, the classical G_k, and the expansions in x^{-1}.

namespace padic
{

/// A point (s, u) of weight space Z_p x Z/(p-1)Z.
struct WeightParameter {
    PadicNumber s;
    long u = 0;
};

enum class CoefficientRoute { divisor, measure };

namespace detail
{

inline void require_nonzero_weight(const PadicNumber &s, const char *what)
{
    if (s.is_zero()) {
        throw PoleError(std::string(what) + " has a pole at s = 0");
    }
}

inline void require_order(int order)
{
    if (order < 0) {
        throw DomainError("q-series order must be non-negative");
    }
}

// a_1..a_N by a parallel map; slot n - 1 always holds a_n.
inline std::vector<PadicNumber> coefficient_map(int order, const std::function<PadicNumber(std::uint64_t)> &an,
                                                unsigned threads)
{
    std::vector<std::optional<PadicNumber>> slots(static_cast<std::size_t>(order));
    const auto workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max(order, 1)));
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            for (int n = static_cast<int>(w) + 1; n <= order; n += static_cast<int>(workers)) {
                slots[static_cast<std::size_t>(n) - 1] = an(static_cast<std::uint64_t>(n));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<PadicNumber> out;
    out.reserve(slots.size());
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

inline QSeries assemble(PadicNumber a0, std::vector<PadicNumber> rest, QSeries::Provenance meta)
{
    const unsigned long p = a0.prime();
    std::vector<PadicNumber> coeffs;
    coeffs.reserve(rest.size() + 1);
    coeffs.push_back(std::move(a0));
    for (auto &c : rest) {
        coeffs.push_back(std::move(c));
    }
    return QSeries(p, std::move(coeffs), meta);
}

inline PadicNumber half(const PadicNumber &v, int prec)
{
    return v * embed_rational(make_rational(1, 2), v.prime(), prec);
}

inline PadicNumber inverse_of(std::uint64_t d, unsigned long p, int prec)
{
    return embed_rational(make_rational(1, static_cast<unsigned long>(d)), p, prec);
}

inline int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

} // namespace detail

/// Classical G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n with exact coefficients.
inline RationalQSeries classical_gk_qexp(int k, int order)
{
    if (k < 4 || k % 2 != 0) {
        throw DomainError("classical G_k needs an even weight k >= 4");
    }
    detail::require_order(order);
    RationalQSeries out;
    out.coeffs.reserve(static_cast<std::size_t>(order) + 1);
    out.coeffs.push_back(-bernoulli(static_cast<unsigned>(k)) / ExactRational(2 * k));
    for (int n = 1; n <= order; ++n) {
        out.coeffs.push_back(sigma(k - 1, static_cast<std::uint64_t>(n)));
    }
    return out;
}

/// a_0(s, x) = zeta_p(1 - s, x) / 2 for x in Q_p \ Z_p, s in Z_p \ {0}.
inline PadicNumber a0_sx(const PadicNumber &s, const PadicNumber &x, int prec, Route route = Route::integral,
                         const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    detail::require_integral_exponent(s);
    detail::require_nonzero_weight(s, "a_0(s, x)");
    const int work = prec + opts.guard;
    return truncate(detail::half(zeta_p(-detail::offset(s, -1, work), x, work, route, opts), work), prec);
}

/// a_0(s, chi, x) = zeta_p(1 - s, chi, x) / 2 for x in Z_p.
inline PadicNumber a0_chi(const PadicNumber &s, const TeichCharacter &chi, const PadicNumber &x, int prec,
                          const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    detail::require_integral_exponent(s);
    detail::require_nonzero_weight(s, "a_0(s, chi, x)");
    const int work = prec + opts.guard;
    return truncate(detail::half(zeta_p_chi(-detail::offset(s, -1, work), chi, x, work, opts), work), prec);
}

/// a_n(s, x) = Int omega_v(x+a) <x+a>^s dmu_n(a)
///           = sum_{d | n, p does not divide d} d^{-1} omega_v(x+d) <x+d>^s.
inline PadicNumber an_sx(const PadicNumber &s, const PadicNumber &x, std::uint64_t n, int prec,
                         CoefficientRoute route = CoefficientRoute::divisor, const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    detail::require_outside_zp(x, "a_n(s, x)");
    detail::require_integral_exponent(s);
    const unsigned long p = x.prime();
    const int guard = opts.guard;
    auto f = [&s, &x, p, guard](std::int64_t a, int w) {
        const PadicNumber y = x + PadicNumber::from_integer(p, static_cast<long>(a), w);
        return omega_v(y, w) * angle_pow(y, s, w, guard);
    };
    if (route == CoefficientRoute::measure) {
        return integrate_measure(Integrand::differentiable(f), MeasureSpec::mu(n), p, prec, opts);
    }
    const int work = prec + guard;
    PadicNumber total = PadicNumber::zero(p);
    for (const auto d : divisors(n)) {
        if (d % p == 0) {
            continue;
        }
        total += detail::inverse_of(d, p, work) * f(static_cast<std::int64_t>(d), work);
    }
    return truncate(total, prec);
}

/// a_n(s, chi, x) = sum_{d | n, p does not divide d} d^{-1} chi(x+d) <x+d>^s
/// for x in Z_p; terms with p | x + d vanish.
inline PadicNumber an_chi(const PadicNumber &s, const TeichCharacter &chi, const PadicNumber &x, std::uint64_t n,
                          int prec, const VolkenbornOptions &opts = {})
{
    detail::check_same_prime(s, x);
    if (chi.prime() != x.prime()) {
        throw DomainError("character and argument use different primes");
    }
    detail::require_in_zp(x, "a_n(s, chi, x)");
    detail::require_integral_exponent(s);
    const unsigned long p = x.prime();
    const int work = prec + opts.guard;
    PadicNumber total = PadicNumber::zero(p);
    for (const auto d : divisors(n)) {
        if (d % p == 0) {
            continue;
        }
        const PadicNumber y = x + PadicNumber::from_integer(p, static_cast<long>(d), work);
        const PadicNumber c = chi(y, work);
        if (c.is_zero()) {
            continue;
        }
        total += detail::inverse_of(d, p, work) * c * angle_pow(y, s, work, opts.guard);
    }
    return truncate(total, prec);
}

/// G*(s, x) = a_0(s, x) + sum_{n <= N} a_n(s, x) q^n.
inline QSeries family_sx(const PadicNumber &s, const PadicNumber &x, int order, int prec,
                         Route a0_route = Route::integral, CoefficientRoute an_route = CoefficientRoute::divisor,
                         const VolkenbornOptions &opts = {})
{
    detail::require_order(order);
    PadicNumber a0 = a0_sx(s, x, prec, a0_route, opts);
    auto rest = detail::coefficient_map(
        order, [&](std::uint64_t n) { return an_sx(s, x, n, prec, an_route, opts); }, opts.threads);
    return detail::assemble(std::move(a0), std::move(rest), QSeries::Provenance::direct);
}

/// G*(s, chi, x) = a_0(s, chi, x) + sum_{n <= N} a_n(s, chi, x) q^n. Odd
/// characters are accepted; their a_0 vanishes.
inline QSeries family_chi(const PadicNumber &s, const TeichCharacter &chi, const PadicNumber &x, int order, int prec,
                          const VolkenbornOptions &opts = {})
{
    detail::require_order(order);
    PadicNumber a0 = a0_chi(s, chi, x, prec, opts);
    auto rest = detail::coefficient_map(
        order, [&](std::uint64_t n) { return an_chi(s, chi, x, n, prec, opts); }, opts.threads);
    return detail::assemble(std::move(a0), std::move(rest), QSeries::Provenance::direct);
}

/// Serre's G*_{s,u}: a_0 = L_p(1 - s, omega^u) / 2 and
/// a_n = sum_{d | n, p does not divide d} d^{-1} omega(d)^u <d>^s, for even u.
inline QSeries serre_family(const PadicNumber &s, long u, int order, int prec, const VolkenbornOptions &opts = {})
{
    const unsigned long p = s.prime();
    require_odd_prime(p);
    if (u % 2 != 0) {
        throw DomainError("Serre's family needs an even u");
    }
    detail::require_order(order);
    detail::require_integral_exponent(s);
    detail::require_nonzero_weight(s, "G*_{s,u}");
    const TeichCharacter omega_u(p, u);
    const int work = prec + opts.guard;

    PadicNumber a0 =
        truncate(detail::half(l_p(-detail::offset(s, -1, work), omega_u, work, opts), work), prec);
    auto an = [&](std::uint64_t n) {
        PadicNumber total = PadicNumber::zero(p);
        for (const auto d : divisors(n)) {
            if (d % p == 0) {
                continue;
            }
            const PadicNumber dp = PadicNumber::from_integer(p, static_cast<long>(d), work);
            total += detail::inverse_of(d, p, work) * omega_u(dp, work) * angle_pow(dp, s, work, opts.guard);
        }
        return truncate(total, prec);
    };
    auto rest = detail::coefficient_map(order, an, opts.threads);
    return detail::assemble(std::move(a0), std::move(rest), QSeries::Provenance::serre);
}

inline QSeries serre_family(const WeightParameter &w, int order, int prec, const VolkenbornOptions &opts = {})
{
    return serre_family(w.s, w.u, order, prec, opts);
}

/// e_{p,j}(s) = -B_j/(2s) + sum_{n <= N} sigma*_{j-1}(n) q^n.
inline QSeries e_pj(unsigned j, const PadicNumber &s, int order, int prec)
{
    const unsigned long p = s.prime();
    require_odd_prime(p);
    detail::require_order(order);
    detail::require_nonzero_weight(s, "e_{p,j}(s)");
    std::vector<PadicNumber> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    const ExactRational b = bernoulli(j);
    coeffs.push_back(b == 0 ? PadicNumber::zero(p)
                            : truncate(embed_rational(-b / 2, p, prec) / s, prec));
    for (int n = 1; n <= order; ++n) {
        coeffs.push_back(embed_rational(sigma_star(static_cast<long>(j) - 1, static_cast<std::uint64_t>(n), p), p, prec));
    }
    return QSeries(p, std::move(coeffs), QSeries::Provenance::series_expansion);
}

namespace detail
{

// Depths used when J is not given: enough terms for the constant and the
// higher coefficients respectively to reach prec + guard digits.
inline int auto_depth_a0(const PadicNumber &s, int m, int prec, int guard)
{
    const int vs = s.is_zero() ? 0 : s.valuation();
    return ceil_div(prec + guard + 2 + vs, m) + guard;
}

inline int auto_depth_an(int m, int prec, int guard)
{
    return ceil_div(prec + guard, m) + guard;
}

// x <x>^{s-1}
inline PadicNumber expansion_prefactor(const PadicNumber &s, const PadicNumber &x, int work, int guard)
{
    return x * angle_pow(x, offset(s, -1, work), work, guard);
}

// C(s, j) x^{-j} for j = 0..J.
inline std::vector<PadicNumber> expansion_weights(const PadicNumber &s, const PadicNumber &x, int depth, int work)
{
    auto weights = binomial_coefficients(s, depth, work);
    const PadicNumber xinv = PadicNumber::one(x.prime(), work) / x;
    PadicNumber xpow = PadicNumber::one(x.prime(), work);
    for (auto &w : weights) {
        w *= xpow;
        xpow *= xinv;
    }
    return weights;
}

inline void require_expansion_domain(const PadicNumber &s, const PadicNumber &x, std::optional<int> depth)
{
    check_same_prime(s, x);
    if (!x.is_zero() && x.valuation() >= 0) {
        throw DomainError("expansion needs |x|_p > 1");
    }
    require_outside_zp(x, "expansion");
    require_integral_exponent(s);
    if (depth && *depth < 0) {
        throw DomainError("series depth J must be non-negative");
    }
}

} // namespace detail

/// a_0(s, x) = x <x>^{s-1} sum_{j <= J} C(s, j) (-B_j/(2s)) x^{-j}, |x|_p > 1.
inline PadicNumber expansion_a0(const PadicNumber &s, const PadicNumber &x, std::optional<int> depth, int prec,
                                int guard = default_guard)
{
    detail::require_expansion_domain(s, x, depth);
    detail::require_nonzero_weight(s, "a_0(s, x)");
    const unsigned long p = x.prime();
    const int m = -x.valuation();
    const int work = prec + guard;
    const int J = depth ? *depth : detail::auto_depth_a0(s, m, prec, guard);
    const auto weights = detail::expansion_weights(s, x, J, work);
    PadicNumber sum = PadicNumber::zero(p);
    for (int j = 0; j <= J; ++j) {
        const ExactRational b = bernoulli(static_cast<unsigned>(j));
        if (b != 0) {
            sum += weights[static_cast<std::size_t>(j)] * embed_rational(-b / 2, p, work);
        }
    }
    sum = cap_absolute(sum / s, (J + 1) * m - 1 - s.valuation());
    return truncate(detail::expansion_prefactor(s, x, work, guard) * sum, prec);
}

/// a_n(s, x) = x <x>^{s-1} sum_{j <= J} C(s, j) sigma*_{j-1}(n) x^{-j}.
inline PadicNumber expansion_an(const PadicNumber &s, const PadicNumber &x, std::uint64_t n, std::optional<int> depth,
                                int prec, int guard = default_guard)
{
    detail::require_expansion_domain(s, x, depth);
    const unsigned long p = x.prime();
    const int m = -x.valuation();
    const int work = prec + guard;
    const int J = depth ? *depth : detail::auto_depth_an(m, prec, guard);
    const auto weights = detail::expansion_weights(s, x, J, work);
    PadicNumber sum = PadicNumber::zero(p);
    for (int j = 0; j <= J; ++j) {
        sum += weights[static_cast<std::size_t>(j)] * embed_rational(sigma_star(j - 1, n, p), p, work);
    }
    sum = cap_absolute(sum, (J + 1) * m);
    return truncate(detail::expansion_prefactor(s, x, work, guard) * sum, prec);
}

/// G*(s, x) = x <x>^{s-1} sum_{j <= J} C(s, j) e_{p,j}(s) x^{-j}.
inline QSeries expansion_family(const PadicNumber &s, const PadicNumber &x, std::optional<int> depth, int order,
                                int prec, int guard = default_guard)
{
    detail::require_expansion_domain(s, x, depth);
    detail::require_nonzero_weight(s, "G*(s, x)");
    detail::require_order(order);
    const unsigned long p = x.prime();
    const int m = -x.valuation();
    const int work = prec + guard;
    const int J = depth ? *depth
                        : std::max(detail::auto_depth_a0(s, m, prec, guard), detail::auto_depth_an(m, prec, guard));
    const auto weights = detail::expansion_weights(s, x, J, work);

    std::vector<PadicNumber> acc(static_cast<std::size_t>(order) + 1, PadicNumber::zero(p));
    for (int j = 0; j <= J; ++j) {
        const QSeries e = e_pj(static_cast<unsigned>(j), s, order, work);
        const QSeries term = weights[static_cast<std::size_t>(j)] * e;
        for (std::size_t n = 0; n < acc.size(); ++n) {
            acc[n] += term[n];
        }
    }
    const PadicNumber prefactor = detail::expansion_prefactor(s, x, work, guard);
    acc[0] = cap_absolute(acc[0], (J + 1) * m - 1 - s.valuation());
    for (std::size_t n = 0; n < acc.size(); ++n) {
        if (n > 0) {
            acc[n] = cap_absolute(acc[n], (J + 1) * m);
        }
        acc[n] = truncate(prefactor * acc[n], prec);
    }
    return QSeries(p, std::move(acc), QSeries::Provenance::series_expansion);
}

} // namespace padic

#endif
