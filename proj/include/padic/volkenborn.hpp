#ifndef PADIC_VOLKENBORN_HPP
#define PADIC_VOLKENBORN_HPP

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
#include <padic/number.hpp>

namespace padic
{

/// A function on Z_p sampled at non-negative integers. `eval(a, prec)` must
/// return f(a) with at least `prec` significant digits where possible.
struct Integrand {
    enum class Regularity { polynomial, uniformly_differentiable };

    std::function<PadicNumber(std::int64_t a, int prec)> eval;
    Regularity regularity = Regularity::uniformly_differentiable;
    // Only read for Regularity::polynomial.
    int degree = 0;

    static Integrand polynomial(std::function<PadicNumber(std::int64_t, int)> f, int degree)
    {
        return Integrand{std::move(f), Regularity::polynomial, degree};
    }
    static Integrand differentiable(std::function<PadicNumber(std::int64_t, int)> f)
    {
        return Integrand{std::move(f), Regularity::uniformly_differentiable, 0};
    }
};

struct MeasureSpec {
    enum class Kind { haar, delta, mu };

    Kind kind = Kind::haar;
    std::uint64_t index = 0; // d for delta, n for mu

    static MeasureSpec haar()
    {
        return {Kind::haar, 0};
    }
    static MeasureSpec delta(std::uint64_t d)
    {
        if (d < 1) {
            throw DomainError("delta measure needs d >= 1");
        }
        return {Kind::delta, d};
    }
    /// mu_n = sum_{d | n, p does not divide d} d^{-1} delta_d
    static MeasureSpec mu(std::uint64_t n)
    {
        if (n < 1) {
            throw DomainError("mu measure needs n >= 1");
        }
        return {Kind::mu, n};
    }
};

struct VolkenbornOptions {
    int level = 0; // 0 selects default_level(p)
    int guard = default_guard;
    std::int64_t budget = 10'000'000;
    unsigned threads = 0; // 0 uses the hardware concurrency
};

struct VolkenbornResult {
    PadicNumber value;
    // v_p(S_N - S_{N-1}); `infinite` for the exact polynomial route.
    int error_valuation = PadicNumber::infinite;
    int level = 0;
    bool exact = false;
};

/// Level schedule: N = 8 for p in {3, 5}, N = 7 for p = 7, otherwise the
/// largest N with p^N <= 10^6 (at least 2).
inline int default_level(unsigned long p)
{
    if (p <= 5) {
        return 8;
    }
    if (p == 7) {
        return 7;
    }
    int level = 0;
    std::uint64_t reach = 1;
    while (reach * p <= 1'000'000) {
        reach *= p;
        ++level;
    }
    return std::max(level, 2);
}

namespace detail
{

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0) {
        return requested;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// sum_{a in [begin, end)} f(a), split into contiguous chunks whose partial
// sums are combined in chunk order. p-adic addition at capped precision is
// exactly associative, so the result does not depend on the thread count.
inline PadicNumber chunked_sum(const Integrand &f, unsigned long p, std::int64_t begin, std::int64_t end, int prec,
                               unsigned threads)
{
    const std::int64_t count = end - begin;
    const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count / 4096, 1)));
    auto run = [&](std::int64_t lo, std::int64_t hi) {
        PadicNumber acc = PadicNumber::zero(p);
        for (std::int64_t a = lo; a < hi; ++a) {
            acc += f.eval(a, prec);
        }
        return acc;
    };
    if (workers <= 1) {
        return run(begin, end);
    }
    std::vector<std::optional<PadicNumber>> partial(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t lo = begin + count * w / workers;
        const std::int64_t hi = begin + count * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                partial[static_cast<std::size_t>(w)] = run(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    PadicNumber total = PadicNumber::zero(p);
    for (const auto &part : partial) {
        total += *part;
    }
    return total;
}

inline int digits_in_base(std::uint64_t n, unsigned long p)
{
    int k = 0;
    while (n > 0) {
        n /= p;
        ++k;
    }
    return k;
}

// Exact Volkenborn integral of a polynomial of degree <= d, from its values
// at 0..d: with Newton coefficients c_k = Delta^k f(0), the integral is
// sum_k c_k (-1)^k / (k + 1), since the level-N sum of C(a, k) is
// p^{-N} C(p^N, k + 1) -> (-1)^k / (k + 1).
inline PadicNumber polynomial_integral(const Integrand &f, unsigned long p, int prec, int guard)
{
    if (f.degree < 0) {
        throw DomainError("polynomial integrand with negative degree");
    }
    const int work = prec + guard + digits_in_base(static_cast<std::uint64_t>(f.degree) + 1, p);
    std::vector<PadicNumber> diff;
    diff.reserve(static_cast<std::size_t>(f.degree) + 1);
    for (int a = 0; a <= f.degree; ++a) {
        diff.push_back(f.eval(a, work));
    }
    PadicNumber total = PadicNumber::zero(p);
    for (int k = 0; k <= f.degree; ++k) {
        const ExactRational weight = make_rational(k % 2 == 0 ? 1 : -1, k + 1);
        total += embed_rational(weight, p, work) * diff[0];
        for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) {
            diff[static_cast<std::size_t>(i)] = diff[static_cast<std::size_t>(i) + 1] - diff[static_cast<std::size_t>(i)];
        }
        diff.pop_back();
    }
    return total;
}

inline std::int64_t checked_power(unsigned long p, int level, std::int64_t budget)
{
    std::int64_t reach = 1;
    for (int i = 0; i < level; ++i) {
        if (reach > budget / static_cast<std::int64_t>(p)) {
            throw BudgetExceeded("Volkenborn level " + std::to_string(level) + " at p = " + std::to_string(p)
                                 + " exceeds the budget of " + std::to_string(budget) + " evaluations");
        }
        reach *= static_cast<std::int64_t>(p);
    }
    return reach;
}

} // namespace detail

/// Riemann sums S_N = p^{-N} sum_{a < p^N} f(a).
///
/// Polynomial integrands get the exact limit. Otherwise S_N is returned with
/// the observed error valuation v_p(S_N - S_{N-1}), and the value is capped
/// at that valuation so no digit beyond the observed agreement is reported.
inline VolkenbornResult volkenborn_integral(const Integrand &f, unsigned long p, int prec,
                                            const VolkenbornOptions &opts = {})
{
    require_odd_prime(p);
    if (f.regularity == Integrand::Regularity::polynomial) {
        return {truncate(detail::polynomial_integral(f, p, prec, opts.guard), prec), PadicNumber::infinite, 0, true};
    }
    const int level = opts.level == 0 ? default_level(p) : opts.level;
    if (level < 2) {
        throw DomainError("Volkenborn level must be at least 2");
    }
    const std::int64_t outer = detail::checked_power(p, level, opts.budget);
    const std::int64_t inner = outer / static_cast<std::int64_t>(p);
    const int work = prec + level + opts.guard;
    const unsigned threads = detail::resolve_threads(opts.threads);

    const PadicNumber coarse_sum = detail::chunked_sum(f, p, 0, inner, work, threads);
    const PadicNumber fine_sum = coarse_sum + detail::chunked_sum(f, p, inner, outer, work, threads);

    const PadicNumber fine = fine_sum / PadicNumber::from_unit(p, level, 1, work);
    const PadicNumber coarse = coarse_sum / PadicNumber::from_unit(p, level - 1, 1, work);
    const int err = agreement_valuation(fine, coarse);
    return {truncate(cap_absolute(fine, err), prec), err, level, false};
}

inline VolkenbornResult volkenborn_integral(const Integrand &f, unsigned long p, int level, int prec,
                                            VolkenbornOptions opts)
{
    opts.level = level;
    return volkenborn_integral(f, p, prec, opts);
}

/// Integration against haar (Volkenborn), delta_d or mu_n. The point
/// measures reduce to finite sums of values of f.
inline PadicNumber integrate_measure(const Integrand &f, const MeasureSpec &m, unsigned long p, int prec,
                                     const VolkenbornOptions &opts = {})
{
    require_odd_prime(p);
    switch (m.kind) {
        case MeasureSpec::Kind::haar:
            return volkenborn_integral(f, p, prec, opts).value;
        case MeasureSpec::Kind::delta:
            return truncate(f.eval(static_cast<std::int64_t>(m.index), prec + opts.guard), prec);
        case MeasureSpec::Kind::mu:
            break;
    }
    const int work = prec + opts.guard;
    PadicNumber total = PadicNumber::zero(p);
    for (const auto d : divisors(m.index)) {
        if (d % p == 0) {
            continue;
        }
        const PadicNumber weight = embed_rational(make_rational(1, static_cast<unsigned long>(d)), p, work);
        total += weight * f.eval(static_cast<std::int64_t>(d), work);
    }
    return truncate(total, prec);
}

/// Validation-only evaluation of a point measure as a limit: delta_d is
/// replaced by the normalised Volkenborn average of f over the ball
/// d + p^radius Z_p, i.e. the integral of y -> f(d + p^radius y), which tends
/// to f(d) as the radius grows.
inline PadicNumber integrate_measure_limit(const Integrand &f, const MeasureSpec &m, unsigned long p, int radius,
                                           int prec, const VolkenbornOptions &opts = {})
{
    require_odd_prime(p);
    if (m.kind == MeasureSpec::Kind::haar) {
        return volkenborn_integral(f, p, prec, opts).value;
    }
    const std::int64_t step = detail::checked_power(p, radius, opts.budget);
    auto ball_average = [&](std::uint64_t d) {
        const auto centre = static_cast<std::int64_t>(d);
        Integrand local = Integrand::differentiable(
            [&f, centre, step](std::int64_t y, int w) { return f.eval(centre + step * y, w); });
        return volkenborn_integral(local, p, prec, opts).value;
    };
    if (m.kind == MeasureSpec::Kind::delta) {
        return ball_average(m.index);
    }
    const int work = prec + opts.guard;
    PadicNumber total = PadicNumber::zero(p);
    for (const auto d : divisors(m.index)) {
        if (d % p == 0) {
            continue;
        }
        total += embed_rational(make_rational(1, static_cast<unsigned long>(d)), p, work) * ball_average(d);
    }
    return truncate(total, prec);
}

} // namespace padic

#endif
