#ifndef PADIC_SERIALIZE_HPP
#define PADIC_SERIALIZE_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <padic/error.hpp>
#include <padic/number.hpp>
#include <padic/qseries.hpp>

// JSON, CSV and text renderings of p-adic values and q-series.

namespace padic
{

inline constexpr int json_schema_version = 1;

namespace detail
{

inline std::string render_digit(unsigned long d, unsigned long p)
{
    if (p <= 36) {
        return std::string(1, "0123456789abcdefghijklmnopqrstuvwxyz"[d]);
    }
    return std::to_string(d);
}

} // namespace detail

/// Base-p digits, most significant first, written "...d2d1d0.d-1d-2" with
/// the leading "..." marking the unknown higher digits. Primes above 36 use
/// comma-separated decimal digits. Zeros render as "0" or "O(p^k)".
inline std::string to_digit_string(const PadicNumber &x)
{
    if (x.is_exact_zero()) {
        return "0";
    }
    const unsigned long p = x.prime();
    if (x.is_inexact_zero()) {
        return "O(" + std::to_string(p) + "^" + std::to_string(x.valuation()) + ")";
    }
    // Digit i of the unit sits at p^(v + i).
    const int v = x.valuation();
    const auto unit_digits = x.digits();
    const bool commas = p > 36;
    auto digit_at = [&](int e) {
        const int i = e - v;
        return (i >= 0 && i < static_cast<int>(unit_digits.size())) ? unit_digits[static_cast<std::size_t>(i)] : 0UL;
    };
    auto append = [&](std::string &out, int from, int to) {
        for (int e = from; e >= to; --e) {
            if (commas && e != from) {
                out += ",";
            }
            out += detail::render_digit(digit_at(e), p);
        }
    };
    const int top = x.absolute_precision() - 1;
    std::string out = "...";
    if (top >= 0) {
        append(out, top, 0);
    } else {
        out += "0";
    }
    if (v < 0) {
        out += ".";
        append(out, -1, v);
    }
    return out;
}

/// Fraction a/b congruent to x modulo its known digits, found by the
/// half-extended Euclidean algorithm. Only returned when |a| * b <= sqrt(p^r)
/// for r known unit digits, since nearly every residue has some fraction
/// within the usual sqrt(p^r / 2) bounds on |a| and b separately.
inline std::optional<ExactRational> reconstruct_rational(const PadicNumber &x)
{
    if (x.is_exact_zero()) {
        return ExactRational(0);
    }
    if (x.is_inexact_zero()) {
        return std::nullopt;
    }
    const unsigned long p = x.prime();
    const mpz_class &m = detail::prime_power(p, x.precision());
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m;
    mpz_class r1 = x.unit();
    mpz_class t0 = 0;
    mpz_class t1 = 1;
    while (r1 > bound) {
        const mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) {
        return std::nullopt;
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    if (abs(r1) * abs(t1) > root) {
        return std::nullopt;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) {
        return std::nullopt;
    }
    ExactRational out = make_rational(r1, t1);
    const int v = x.valuation();
    if (v >= 0) {
        out *= ExactRational(detail::prime_power(p, v));
    } else {
        out /= ExactRational(detail::prime_power(p, -v));
    }
    return out;
}

inline std::string to_text(const PadicNumber &x)
{
    std::string out = to_digit_string(x);
    if (!x.is_exact_zero()) {
        out += " (mod " + std::to_string(x.prime()) + "^" + std::to_string(x.absolute_precision()) + ")";
    }
    if (const auto r = reconstruct_rational(x); r && !x.is_zero()) {
        out += " = " + r->get_str();
    }
    return out;
}

/// {prime, kind, valuation, precision, digits (least significant first)}.
inline nlohmann::json to_json(const PadicNumber &x)
{
    nlohmann::json j;
    j["prime"] = x.prime();
    switch (x.kind()) {
        case PadicNumber::Kind::exact_zero:
            j["kind"] = "exact_zero";
            j["valuation"] = nullptr;
            break;
        case PadicNumber::Kind::inexact_zero:
            j["kind"] = "inexact_zero";
            j["valuation"] = x.valuation();
            break;
        case PadicNumber::Kind::value:
            j["kind"] = "value";
            j["valuation"] = x.valuation();
            break;
    }
    j["is_zero"] = x.is_zero();
    j["precision"] = x.precision();
    j["digits"] = x.digits();
    j["text"] = to_digit_string(x);
    return j;
}

inline PadicNumber padic_from_json(const nlohmann::json &j)
{
    const auto p = j.at("prime").get<unsigned long>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "exact_zero") {
        return PadicNumber::zero(p);
    }
    const int v = j.at("valuation").get<int>();
    if (kind == "inexact_zero") {
        return PadicNumber::zero_to(p, v);
    }
    if (kind != "value") {
        throw DomainError("unknown p-adic kind '" + kind + "'");
    }
    const auto digits = j.at("digits").get<std::vector<unsigned long>>();
    if (digits.empty() || digits.front() == 0) {
        throw DomainError("a p-adic value needs a nonzero lowest unit digit");
    }
    mpz_class unit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= p) {
            throw DomainError("digit out of range for p = " + std::to_string(p));
        }
        unit = unit * p + *it;
    }
    return PadicNumber::from_unit(p, v, unit, static_cast<int>(digits.size()));
}

/// {"schema": 1, prime, order, coeffs, meta}.
inline nlohmann::json to_json(const QSeries &f)
{
    nlohmann::json j;
    j["schema"] = json_schema_version;
    j["prime"] = f.prime();
    j["order"] = f.order();
    j["meta"] = to_string(f.meta());
    j["coeffs"] = nlohmann::json::array();
    for (const auto &c : f.coeffs()) {
        j["coeffs"].push_back(to_json(c));
    }
    return j;
}

inline QSeries qseries_from_json(const nlohmann::json &j)
{
    if (j.at("schema").get<int>() != json_schema_version) {
        throw DomainError("unsupported q-series schema");
    }
    const auto p = j.at("prime").get<unsigned long>();
    const auto meta_name = j.at("meta").get<std::string>();
    QSeries::Provenance meta = QSeries::Provenance::direct;
    for (const auto candidate : {QSeries::Provenance::direct, QSeries::Provenance::series_expansion,
                                 QSeries::Provenance::serre, QSeries::Provenance::classical_rational}) {
        if (meta_name == to_string(candidate)) {
            meta = candidate;
        }
    }
    std::vector<PadicNumber> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(padic_from_json(c));
    }
    QSeries out(p, std::move(coeffs), meta);
    if (out.order() != j.at("order").get<int>()) {
        throw DomainError("q-series order does not match its coefficient count");
    }
    return out;
}

/// One "n,digit-string" row per coefficient, with a header line.
inline std::string to_csv(const QSeries &f)
{
    std::ostringstream out;
    out << "n,value\n";
    for (int n = 0; n <= f.order(); ++n) {
        out << n << ",\"" << to_digit_string(f[static_cast<std::size_t>(n)]) << "\"\n";
    }
    return out.str();
}

} // namespace padic

#endif
