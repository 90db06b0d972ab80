#ifndef PADIC_PARSE_HPP
#define PADIC_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <padic/error.hpp>
#include <padic/number.hpp>

// Parsing of command-line values: "a/b", integers, decimals such as "0.25",
// and p-adic digit strings "...d2d1d0.d-1" (most significant first).

namespace padic
{

namespace detail
{

inline bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

inline unsigned long digit_value(std::string_view token, unsigned long p)
{
    unsigned long d = 0;
    if (p > 36) {
        if (!all_digits(token)) {
            throw DomainError("bad digit '" + std::string(token) + "'");
        }
        d = std::stoul(std::string(token));
    } else {
        if (token.size() != 1) {
            throw DomainError("bad digit '" + std::string(token) + "'");
        }
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
        if (c >= '0' && c <= '9') {
            d = static_cast<unsigned long>(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            d = static_cast<unsigned long>(c - 'a' + 10);
        } else {
            throw DomainError(std::string("bad digit '") + c + "'");
        }
    }
    if (d >= p) {
        throw DomainError("digit " + std::to_string(d) + " out of range for p = " + std::to_string(p));
    }
    return d;
}

inline std::vector<unsigned long> split_digits(std::string_view s, unsigned long p)
{
    std::vector<unsigned long> out;
    if (s.empty()) {
        return out;
    }
    if (p > 36) {
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            out.push_back(digit_value(s.substr(start, comma - start), p));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
            out.push_back(digit_value(s.substr(i, 1), p));
        }
    }
    return out;
}

} // namespace detail

/// Parses "a/b", "-12", "0.25" or "1e3"-free decimals into a rational.
inline ExactRational parse_rational(std::string_view text)
{
    std::string_view s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    ExactRational out;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) {
            throw DomainError("cannot parse '" + std::string(text) + "' as a rational");
        }
        out = make_rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !detail::all_digits(whole)) || !detail::all_digits(frac)) {
            throw DomainError("cannot parse '" + std::string(text) + "' as a decimal");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const mpz_class digits(std::string(whole) + std::string(frac), 10);
        out = make_rational(digits, scale);
    } else {
        if (!detail::all_digits(s)) {
            throw DomainError("cannot parse '" + std::string(text) + "' as a number");
        }
        out = ExactRational(mpz_class(std::string(s), 10));
    }
    return negative ? ExactRational(-out) : out;
}

/// A value of Q_p: either a rational (embedded with `prec` digits) or a
/// digit string starting with "..." whose digits are all taken as known.
inline PadicNumber parse_padic(std::string_view text, unsigned long p, int prec)
{
    require_odd_prime(p);
    std::string_view s = detail::trim(text);
    if (s.substr(0, 3) == "..." || s.substr(0, 3) == "\xe2\x80\xa6") {
        s.remove_prefix(3);
        std::string_view whole = s;
        std::string_view frac;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            whole = s.substr(0, dot);
            frac = s.substr(dot + 1);
        }
        const auto high = detail::split_digits(whole, p);
        const auto low = detail::split_digits(frac, p);
        if (high.empty() && low.empty()) {
            throw DomainError("empty p-adic digit string");
        }
        mpz_class value = 0;
        for (const auto d : high) {
            value = value * p + d;
        }
        for (const auto d : low) {
            value = value * p + d;
        }
        const int v = -static_cast<int>(low.size());
        const int count = static_cast<int>(high.size() + low.size());
        if (value == 0) {
            return PadicNumber::zero_to(p, v + count);
        }
        mpz_class unit = value;
        const int k = detail::remove_p(unit, p);
        return PadicNumber::from_unit(p, v + k, unit, count - k);
    }
    const ExactRational r = parse_rational(s);
    if (r == 0) {
        return PadicNumber::zero(p);
    }
    return embed_rational(r, p, prec);
}

} // namespace padic

#endif
