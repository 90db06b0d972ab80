#include <gtest/gtest.h>

#include <padic/eisenstein.hpp>
#include <padic/parse.hpp>
#include <padic/serialize.hpp>

#include "oracles.hpp"

using namespace padic;
using oracle::q;

TEST(Parse, Rationals)
{
    EXPECT_EQ(parse_rational("3/10"), make_rational(3, 10));
    EXPECT_EQ(parse_rational("-4/6"), make_rational(-2, 3));
    EXPECT_EQ(parse_rational("17"), 17);
    EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
    EXPECT_EQ(parse_rational(" -1.5 "), make_rational(-3, 2));
    EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational("1/2/3"), DomainError);
}

TEST(Parse, DigitStrings)
{
    const PadicNumber x = parse_padic("...2222", 5, 12);
    EXPECT_EQ(x.precision(), 4);
    EXPECT_TRUE(agrees(x, q(-1, 2, 5, 4)));
    const PadicNumber y = parse_padic("...13.2", 5, 12);
    EXPECT_EQ(y.valuation(), -1);
    EXPECT_EQ(y.absolute_precision(), 2);
    EXPECT_TRUE(agrees(y, q(8 * 5 + 2, 5, 5, 8)));
    EXPECT_EQ(parse_padic("...100", 5, 12).valuation(), 2);
    EXPECT_TRUE(parse_padic("...000", 5, 12).is_inexact_zero());
    EXPECT_THROW(parse_padic("...17", 5, 12), DomainError);
    EXPECT_TRUE(parse_padic("0", 5, 12).is_exact_zero());
    EXPECT_TRUE(agrees(parse_padic("...1,40", 41, 12), PadicNumber::from_integer(41, 81L, 2)));
}

TEST(Render, DigitStrings)
{
    EXPECT_EQ(to_digit_string(q(-1, 2, 5, 4)), "...2222");
    EXPECT_EQ(to_digit_string(q(1, 25, 5, 1)), "...0.01");
    EXPECT_EQ(to_digit_string(q(3, 10, 5, 4)), "...222.4");
    EXPECT_EQ(to_digit_string(PadicNumber::from_integer(5, 10L, 2)), "...020");
    EXPECT_EQ(to_digit_string(PadicNumber::zero(5)), "0");
    EXPECT_EQ(to_digit_string(PadicNumber::zero_to(5, 3)), "O(5^3)");
    EXPECT_EQ(to_digit_string(PadicNumber::from_integer(41, 81L, 2)), "...1,40");
}

TEST(Render, RoundTripThroughParser)
{
    for (const auto &[a, b] : std::vector<std::pair<long, long>>{{3, 10}, {-7, 125}, {44, 1}, {1, 3}}) {
        const PadicNumber x = q(a, b, 7, 9);
        EXPECT_EQ(parse_padic(to_digit_string(x), 7, 20), x);
    }
}

TEST(Render, RationalReconstruction)
{
    EXPECT_EQ(reconstruct_rational(q(3, 10, 5, 12)), make_rational(3, 10));
    EXPECT_EQ(reconstruct_rational(q(-31, 60, 5, 12)), make_rational(-31, 60));
    EXPECT_EQ(reconstruct_rational(PadicNumber::zero(5)), 0);
    EXPECT_FALSE(reconstruct_rational(PadicNumber::zero_to(5, 4)).has_value());
    EXPECT_EQ(to_text(q(3, 10, 5, 12)), "...22222222222.4 (mod 5^11) = 3/10");
}

TEST(Json, NumberRoundTrip)
{
    for (const PadicNumber &x : {q(3, 10, 5, 12), q(-4, 1, 5, 6), PadicNumber::zero(5), PadicNumber::zero_to(5, 7)}) {
        const auto j = to_json(x);
        EXPECT_EQ(padic_from_json(j), x);
        EXPECT_EQ(padic_from_json(nlohmann::json::parse(j.dump())), x);
    }
    const auto j = to_json(q(3, 10, 5, 4));
    EXPECT_EQ(j["valuation"], -1);
    EXPECT_EQ(j["digits"], (std::vector<unsigned long>{4, 2, 2, 2}));
    EXPECT_EQ(j["is_zero"], false);
}

TEST(Json, SeriesRoundTrip)
{
    const QSeries f = e_pj(2, q(3, 1, 5, 12), 5, 10);
    const auto j = to_json(f);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["order"], 5);
    EXPECT_EQ(j["meta"], "series-expansion");
    const QSeries g = qseries_from_json(j);
    EXPECT_EQ(g.meta(), f.meta());
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(g[static_cast<std::size_t>(n)], f[static_cast<std::size_t>(n)]);
    }
    auto bad = j;
    bad["schema"] = 2;
    EXPECT_THROW(qseries_from_json(bad), DomainError);
}

TEST(Csv, OneRowPerCoefficient)
{
    const QSeries f = classical_gk_qexp(4, 2).embed(5, 3);
    EXPECT_EQ(to_csv(f), "n,value\n0,\"...42.2\"\n1,\"...001\"\n2,\"...014\"\n");
}

TEST(QSeriesType, Invariants)
{
    EXPECT_THROW(QSeries(5, {}, QSeries::Provenance::direct), DomainError);
    EXPECT_THROW(QSeries(5, {q(1, 1, 7, 3)}, QSeries::Provenance::direct), DomainError);
    const QSeries a(5, {q(1, 1, 5, 6), q(2, 1, 5, 6)}, QSeries::Provenance::direct);
    const QSeries b(5, {q(1, 1, 5, 6)}, QSeries::Provenance::direct);
    EXPECT_EQ((a + b).order(), 0);
    EXPECT_EQ(truncate(a, 2)[1].precision(), 2);
}

TEST(Render, NoFractionForGenericValues)
{
    // A value with no small rational representative stays undecorated.
    const PadicNumber x = q(351, 6725, 5, 10);
    EXPECT_FALSE(reconstruct_rational(x).has_value());
    EXPECT_EQ(to_text(x).find('='), std::string::npos);
}
