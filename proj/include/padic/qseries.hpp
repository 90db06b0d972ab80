#ifndef PADIC_QSERIES_HPP
#define PADIC_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <padic/error.hpp>
#include <padic/number.hpp>

namespace padic
{

/// Truncated q-expansion a_0 + a_1 q + ... + a_N q^N with p-adic
/// coefficients. q is formal; there is no evaluation at a numeric q.
class QSeries
{
public:
    enum class Provenance { direct, series_expansion, serre, classical_rational };

    QSeries(unsigned long p, std::vector<PadicNumber> coeffs, Provenance meta)
        : p_(p), coeffs_(std::move(coeffs)), meta_(meta)
    {
        if (coeffs_.empty()) {
            throw DomainError("a q-series needs at least the constant coefficient");
        }
        for (const auto &c : coeffs_) {
            if (c.prime() != p_) {
                throw DomainError("q-series coefficients must share the prime " + std::to_string(p_));
            }
        }
    }

    unsigned long prime() const noexcept
    {
        return p_;
    }
    /// N, the highest power of q kept.
    int order() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    Provenance meta() const noexcept
    {
        return meta_;
    }
    const std::vector<PadicNumber> &coeffs() const noexcept
    {
        return coeffs_;
    }
    const PadicNumber &operator[](std::size_t n) const
    {
        return coeffs_.at(n);
    }

private:
    unsigned long p_;
    std::vector<PadicNumber> coeffs_;
    Provenance meta_;
};

inline const char *to_string(QSeries::Provenance meta) noexcept
{
    switch (meta) {
        case QSeries::Provenance::direct:
            return "direct";
        case QSeries::Provenance::series_expansion:
            return "series-expansion";
        case QSeries::Provenance::serre:
            return "serre";
        case QSeries::Provenance::classical_rational:
            return "classical-rational";
    }
    return "unknown";
}

/// Coefficientwise sum; the order of the shorter operand wins.
inline QSeries operator+(const QSeries &a, const QSeries &b)
{
    if (a.prime() != b.prime()) {
        throw DomainError("q-series over different primes");
    }
    const auto n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
    std::vector<PadicNumber> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(a[i] + b[i]);
    }
    return QSeries(a.prime(), std::move(out), a.meta());
}

inline QSeries operator*(const PadicNumber &scalar, const QSeries &f)
{
    std::vector<PadicNumber> out;
    out.reserve(f.coeffs().size());
    for (const auto &c : f.coeffs()) {
        out.push_back(scalar * c);
    }
    return QSeries(f.prime(), std::move(out), f.meta());
}

inline QSeries truncate(const QSeries &f, int precision)
{
    std::vector<PadicNumber> out;
    out.reserve(f.coeffs().size());
    for (const auto &c : f.coeffs()) {
        out.push_back(truncate(c, precision));
    }
    return QSeries(f.prime(), std::move(out), f.meta());
}

/// Smallest v_p(a_n - b_n) over the common coefficients.
inline int agreement_valuation(const QSeries &a, const QSeries &b)
{
    const auto n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
    int worst = PadicNumber::infinite;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::min(worst, agreement_valuation(a[i], b[i]));
    }
    return worst;
}

/// q-expansion with exact rational coefficients (classical Eisenstein series).
struct RationalQSeries {
    std::vector<ExactRational> coeffs;

    int order() const noexcept
    {
        return static_cast<int>(coeffs.size()) - 1;
    }

    QSeries embed(unsigned long p, int precision) const
    {
        std::vector<PadicNumber> out;
        out.reserve(coeffs.size());
        for (const auto &c : coeffs) {
            out.push_back(embed_rational(c, p, precision));
        }
        return QSeries(p, std::move(out), QSeries::Provenance::classical_rational);
    }
};

} // namespace padic

#endif
