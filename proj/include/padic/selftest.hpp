#ifndef PADIC_SELFTEST_HPP
#define PADIC_SELFTEST_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <padic/combinatorics.hpp>
#include <padic/decomposition.hpp>
#include <padic/eisenstein.hpp>
#include <padic/error.hpp>
#include <padic/hurwitz.hpp>
#include <padic/number.hpp>
#include <padic/volkenborn.hpp>

// The acceptance checks, each comparing a computed value against an exact
// rational or an independent second route.

namespace padic::selftest
{

struct Config {
    std::optional<unsigned long> prime; // replaces every prime list
    std::optional<int> level;           // replaces the Volkenborn levels
    unsigned threads = 0;
};

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

namespace detail
{

// Tracks the worst agreement seen against a required valuation.
class Tally
{
public:
    explicit Tally(int required) : required_(required) {}

    void observe(int valuation, const std::string &where)
    {
        if (valuation < worst_) {
            worst_ = valuation;
            worst_at_ = where;
        }
        ++checks_;
    }
    void fail(const std::string &why)
    {
        failures_.push_back(why);
    }
    bool passed() const
    {
        return failures_.empty() && worst_ >= required_;
    }
    std::string summary() const
    {
        std::string out = std::to_string(checks_) + " checks";
        if (worst_ != PadicNumber::infinite) {
            out += ", min valuation " + std::to_string(worst_) + " (need >= " + std::to_string(required_) + ")";
            if (!passed()) {
                out += " at " + worst_at_;
            }
        }
        if (!failures_.empty()) {
            out += "; " + std::to_string(failures_.size()) + " failures, first: " + failures_.front();
        }
        return out;
    }

private:
    int required_;
    int worst_ = PadicNumber::infinite;
    std::string worst_at_;
    int checks_ = 0;
    std::vector<std::string> failures_;
};

inline std::vector<unsigned long> primes_or(const Config &cfg, std::vector<unsigned long> defaults)
{
    if (cfg.prime) {
        return {*cfg.prime};
    }
    return defaults;
}

// `level` is never deeper than the prime's default schedule.
inline VolkenbornOptions options(const Config &cfg, unsigned long p, int level)
{
    VolkenbornOptions opts;
    opts.level = cfg.level.value_or(level == 0 ? 0 : std::min(level, default_level(p)));
    opts.threads = cfg.threads;
    return opts;
}

inline Result timed(int id, std::string name, double limit, const std::function<Tally()> &body)
{
    Result r;
    r.id = id;
    r.name = std::move(name);
    r.limit_seconds = limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Tally t = body();
        r.passed = t.passed();
        r.detail = t.summary();
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = std::string("raised: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds >= limit) {
        r.passed = false;
        r.detail += "; over the time limit";
    }
    return r;
}

inline PadicNumber rational(long a, long b, unsigned long p, int prec)
{
    return embed_rational(make_rational(a, b), p, prec);
}

inline std::string at(const std::string &name, long value)
{
    return name + "=" + std::to_string(value);
}

} // namespace detail

/// 1. Volkenborn limit of a^n against B_n, exact and by level sums.
inline Result bernoulli_anchor(const Config &cfg)
{
    return detail::timed(1, "Volkenborn-Bernoulli anchor", 30.0, [&] {
        const int prec = 12;
        detail::Tally tally(4);
        for (const auto p : detail::primes_or(cfg, {3, 5, 7})) {
            const VolkenbornOptions opts = detail::options(cfg, p, 6);
            for (unsigned n = 0; n <= 12; ++n) {
                auto f = [p, n](std::int64_t a, int w) {
                    mpz_class value;
                    mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(a), n);
                    return PadicNumber::from_integer(p, value, w);
                };
                const std::string where = detail::at("p", static_cast<long>(p)) + " " + detail::at("n", n);
                const PadicNumber expected = embed_rational(bernoulli(n), p, prec);
                const PadicNumber exact =
                    volkenborn_integral(Integrand::polynomial(f, static_cast<int>(n)), p, prec, opts).value;
                // B_n = 0 for odd n > 1 comes back as O(p^k), so compare digits.
                if (agreement_valuation(exact, expected) < prec - 1) {
                    tally.fail("exact route differs from B_n at " + where);
                }
                const VolkenbornResult sums = volkenborn_integral(Integrand::differentiable(f), p, prec, opts);
                tally.observe(agreement_valuation(sums.value, expected), where);
            }
        }
        return tally;
    });
}

/// 2. zeta_p(1-k, x) against -omega_v(x)^{1-k} B_k(x) / k for both routes.
inline Result closed_form(const Config &cfg)
{
    return detail::timed(2, "Closed-form interpolation", 10.0, [&] {
        const int prec = 12;
        detail::Tally tally(prec - 4);
        for (const auto p : detail::primes_or(cfg, {5})) {
            const auto lp = static_cast<long>(p);
            const std::vector<ExactRational> xs = {make_rational(1, lp), make_rational(2, lp), make_rational(1, lp * lp)};
            for (const auto &xr : xs) {
                const PadicNumber x = embed_rational(xr, p, prec + 8);
                const PadicNumber ang = angle(x);
                for (unsigned k = 1; k <= 8; ++k) {
                    // <x>^{k-1} x^{1-k} B_k(x) / k with <x>^{k-1} by repeated multiplication.
                    ExactRational xpow = 1;
                    for (unsigned i = 1; i < k; ++i) {
                        xpow /= xr;
                    }
                    const ExactRational rat = bernoulli_poly(k, xr) * xpow / ExactRational(static_cast<long>(k));
                    const PadicNumber expected =
                        -(pow(ang, k - 1) * embed_rational(rat, p, prec + 8));
                    const PadicNumber s = PadicNumber::from_integer(p, 1 - static_cast<long>(k), prec + 8);
                    const std::string where =
                        detail::at("p", lp) + " x=" + xr.get_str() + " " + detail::at("k", k);
                    tally.observe(agreement_valuation(zeta_p(s, x, prec, Route::series), expected), where + " series");
                    tally.observe(agreement_valuation(zeta_p(s, x, prec, Route::integral), expected),
                                  where + " integral");
                }
            }
        }
        return tally;
    });
}

/// 3. L_p(1-k, omega^k) against -(1 - p^{k-1}) B_k / k.
inline Result l_value_oracle(const Config &cfg)
{
    return detail::timed(3, "L-value oracle", 60.0, [&] {
        const int prec = 12;
        detail::Tally tally(6);
        for (const auto p : detail::primes_or(cfg, {5, 7})) {
            const VolkenbornOptions opts = detail::options(cfg, p, 6);
            if (opts.level > 6) {
                tally.fail("Volkenborn level above 6");
            }
            for (const long k : {2L, 4L, 6L}) {
                const long u = k % (static_cast<long>(p) - 1);
                mpz_class pk;
                mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k - 1));
                const ExactRational oracle =
                    -(ExactRational(1) - ExactRational(pk)) * bernoulli(static_cast<unsigned>(k)) / ExactRational(k);
                const PadicNumber s = PadicNumber::from_integer(p, 1 - k, prec + 8);
                const PadicNumber value = l_p(s, TeichCharacter(p, u), prec, opts);
                tally.observe(agreement_valuation(value, embed_rational(oracle, p, prec + 8)),
                              detail::at("p", static_cast<long>(p)) + " " + detail::at("k", k));
            }
        }
        return tally;
    });
}

/// 4. a_n(s, x) by mu_n integration against the divisor sum.
inline Result measure_divisor(const Config &cfg)
{
    return detail::timed(4, "Measure/divisor equivalence", 10.0, [&] {
        const int prec = 12;
        detail::Tally tally(0);
        for (const auto p : detail::primes_or(cfg, {5})) {
            const auto lp = static_cast<long>(p);
            const VolkenbornOptions opts = detail::options(cfg, p, 0);
            for (const long sv : {0L, 2L, 1 + lp}) {
                const PadicNumber s = PadicNumber::from_integer(p, sv, prec + 8);
                for (const long den : {lp, lp * lp}) {
                    const PadicNumber x = detail::rational(1, den, p, prec + 8);
                    for (std::uint64_t n = 1; n <= 50; ++n) {
                        const PadicNumber by_measure = an_sx(s, x, n, prec, CoefficientRoute::measure, opts);
                        const PadicNumber by_divisors = an_sx(s, x, n, prec, CoefficientRoute::divisor, opts);
                        const std::string where = detail::at("s", sv) + " x=1/" + std::to_string(den) + " "
                                                  + detail::at("n", static_cast<long>(n));
                        if (!(by_measure == by_divisors)) {
                            tally.fail(where);
                        }
                        tally.observe(PadicNumber::infinite, where);
                    }
                }
            }
        }
        return tally;
    });
}

/// 5. G*(s, omega^u, 0) against Serre's G*_{s,u}, coefficientwise.
inline Result serre_specialization(const Config &cfg)
{
    return detail::timed(5, "Serre specialization", 5.0, [&] {
        const int prec = 12;
        const int order = 16;
        detail::Tally tally(0);
        for (const auto p : detail::primes_or(cfg, {5})) {
            const VolkenbornOptions opts = detail::options(cfg, p, 6);
            for (const auto &[sv, u] : std::vector<std::pair<long, long>>{{2, 0}, {4, 0}, {2, 2}}) {
                const PadicNumber s = PadicNumber::from_integer(p, sv, prec + 8);
                const QSeries direct = family_chi(s, TeichCharacter(p, u), PadicNumber::zero(p), order, prec, opts);
                const QSeries serre = serre_family(s, u, order, prec, opts);
                for (int n = 0; n <= order; ++n) {
                    const std::string where = detail::at("s", sv) + " " + detail::at("u", u) + " " + detail::at("n", n);
                    if (!(direct[static_cast<std::size_t>(n)] == serre[static_cast<std::size_t>(n)])) {
                        tally.fail(where);
                    }
                    tally.observe(PadicNumber::infinite, where);
                }
            }
        }
        return tally;
    });
}

/// 6. The expansion of G*(s, x) in powers of 1/x against the direct family.
inline Result expansion_identity(const Config &cfg)
{
    return detail::timed(6, "Expansion identity", 30.0, [&] {
        const int prec = 12;
        const int order = 8;
        detail::Tally tally(8);
        for (const auto p : detail::primes_or(cfg, {5})) {
            const auto lp = static_cast<long>(p);
            const VolkenbornOptions opts = detail::options(cfg, p, 0);
            const PadicNumber x = detail::rational(1, lp * lp, p, prec + 8);
            for (const long sv : {2L, 3L, 1 + lp}) {
                const PadicNumber s = PadicNumber::from_integer(p, sv, prec + 8);
                const QSeries direct = family_sx(s, x, order, prec, Route::integral, CoefficientRoute::divisor, opts);
                const QSeries expanded = expansion_family(s, x, std::nullopt, order, prec, opts.guard);
                for (int n = 0; n <= order; ++n) {
                    tally.observe(agreement_valuation(direct[static_cast<std::size_t>(n)],
                                                      expanded[static_cast<std::size_t>(n)]),
                                  detail::at("s", sv) + " " + detail::at("n", n));
                }
            }
        }
        return tally;
    });
}

/// 7. sigma_{k_i - 1}(n) = sigma*_{k-1}(n) mod p^{i+1}, k_i = k + (p-1) p^i.
inline Result serre_limit(const Config &cfg)
{
    return detail::timed(7, "Serre limit congruence", 5.0, [&] {
        detail::Tally tally(0);
        for (const auto p : detail::primes_or(cfg, {5})) {
            for (const long k : {2L, 4L}) {
                for (int i = 1; i <= 3; ++i) {
                    mpz_class pi;
                    mpz_ui_pow_ui(pi.get_mpz_t(), p, static_cast<unsigned long>(i));
                    const long ki = k + static_cast<long>(p - 1) * pi.get_si();
                    for (std::uint64_t n = 1; n <= 100; ++n) {
                        const ExactRational diff = sigma(ki - 1, n) - sigma_star(k - 1, n, p);
                        const int v = rational_valuation(diff, p);
                        const std::string where =
                            detail::at("k", k) + " " + detail::at("i", i) + " " + detail::at("n", static_cast<long>(n));
                        if (v < i + 1) {
                            tally.fail(where + " has valuation " + std::to_string(v));
                        }
                        tally.observe(PadicNumber::infinite, where);
                    }
                }
            }
        }
        return tally;
    });
}

/// 8. H_p(s, a, p^m) against omega(a)^{-1} zeta_p(s, a / p^m).
inline Result washington(const Config &cfg)
{
    return detail::timed(8, "Washington cross-check", 5.0, [&] {
        const int prec = 12;
        detail::Tally tally(8);
        for (const auto p : detail::primes_or(cfg, {5})) {
            const auto lp = static_cast<long>(p);
            for (const auto &[a, m] : std::vector<std::pair<long, int>>{{1, 1}, {2, 1}, {3, 2}}) {
                if (a % lp == 0) {
                    continue;
                }
                long F = 1;
                for (int i = 0; i < m; ++i) {
                    F *= lp;
                }
                if (a >= F) {
                    continue;
                }
                for (const long sv : {0L, 2L}) {
                    const PadicNumber s = PadicNumber::from_integer(p, sv, prec + 8);
                    const PadicNumber hp = washington_hp(s, a, F, prec);
                    const PadicNumber ap = PadicNumber::from_integer(p, a, prec + 8);
                    const PadicNumber z = zeta_p(s, detail::rational(a, F, p, prec + 8), prec);
                    const PadicNumber rhs = z / teichmuller(ap, prec + 8);
                    tally.observe(agreement_valuation(hp, rhs),
                                  detail::at("a", a) + " " + detail::at("m", m) + " " + detail::at("s", sv));
                }
            }
        }
        return tally;
    });
}

inline std::vector<Result> run_all(const Config &cfg)
{
    return {bernoulli_anchor(cfg), closed_form(cfg),     l_value_oracle(cfg), measure_divisor(cfg),
            serre_specialization(cfg), expansion_identity(cfg), serre_limit(cfg),   washington(cfg)};
}

} // namespace padic::selftest

#endif
