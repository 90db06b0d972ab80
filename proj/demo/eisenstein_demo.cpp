// Walks through the main entry points: a Hurwitz zeta value by both routes,
// a Kubota-Leopoldt L-value, and an Eisenstein q-expansion checked against
// its expansion in powers of 1/x.

#include <iostream>

#include <padic/padic.hpp>
#include <padic/serialize.hpp>

int main()
{
    using namespace padic;
    const unsigned long p = 5;
    const int prec = 12;

    const PadicNumber s = parse_padic("7/3", p, 20);
    const PadicNumber x = parse_padic("2/25", p, 20);

    const PadicNumber by_series = zeta_p(s, x, prec, Route::series);
    const PadicNumber by_integral = zeta_p(s, x, prec, Route::integral);
    std::cout << "zeta_5(7/3, 2/25)\n"
              << "  series   " << to_text(by_series) << "\n"
              << "  integral " << to_text(by_integral) << "\n"
              << "  agree to 5^" << agreement_valuation(by_series, by_integral) << "\n\n";

    VolkenbornOptions opts;
    opts.level = 6;
    const PadicNumber l = l_p(parse_padic("-3", p, 20), TeichCharacter(p, 4), prec, opts);
    std::cout << "L_5(-3, omega^4) = " << to_text(l) << "\n\n";

    const PadicNumber weight = parse_padic("3", p, 20);
    const QSeries direct = family_sx(weight, x, 6, prec);
    const QSeries expanded = expansion_family(weight, x, std::nullopt, 6, prec);
    std::cout << "G*(3, 2/25), direct vs expansion\n";
    for (std::size_t n = 0; n <= 6; ++n) {
        std::cout << "  q^" << n << "  " << to_digit_string(direct[n]) << "  agree to 5^"
                  << agreement_valuation(direct[n], expanded[n]) << "\n";
    }
    return 0;
}
