// padic-eis: command-line front end for p-adic Hurwitz zeta values,
// Kubota-Leopoldt L-values and p-adic Eisenstein q-expansions.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <padic/padic.hpp>
#include <padic/selftest.hpp>
#include <padic/serialize.hpp>

namespace
{

using nlohmann::json;
using namespace padic;

enum ExitCode { ok = 0, selftest_failed = 1, domain_error = 2, precision_error = 3 };

struct Config {
    unsigned long p = 5;
    int prec = 12;
    int order = 32;
    std::optional<int> depth;
    int level = 0;
    unsigned threads = 0;
    std::string format = "text";
    std::string out;

    std::string s;
    std::string x;
    std::optional<long> u;
    std::optional<int> k;
    std::uint64_t n = 1;
    unsigned j = 0;
    long a = 1;
    long F = 5;
    std::string route = "series";
    std::string a0_route = "integral";
    std::string check;
};

int env_int(const char *name, int fallback)
{
    const char *v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
        return fallback;
    }
    try {
        return std::stoi(v);
    } catch (const std::exception &) {
        throw DomainError(std::string(name) + " is not an integer");
    }
}

void validate(const Config &cfg)
{
    require_odd_prime(cfg.p);
    if (cfg.prec < 4 || cfg.prec > 256) {
        throw DomainError("--prec must lie in [4, 256]");
    }
    if (cfg.order < 0 || cfg.order > 4096) {
        throw DomainError("--order must lie in [0, 4096]");
    }
}

VolkenbornOptions options(const Config &cfg)
{
    VolkenbornOptions opts;
    opts.level = cfg.level;
    opts.threads = cfg.threads;
    return opts;
}

PadicNumber arg(const Config &cfg, const std::string &text, const char *name)
{
    if (text.empty()) {
        throw DomainError(std::string("missing --") + name);
    }
    // Inputs carry extra digits so they never limit the result.
    return parse_padic(text, cfg.p, cfg.prec + 2 * default_guard);
}

class Output
{
public:
    explicit Output(const Config &cfg) : cfg_(cfg) {}

    void value(const std::string &command, const PadicNumber &v, json extra = json::object())
    {
        if (cfg_.format == "json") {
            json j = header(command);
            j["value"] = to_json(v);
            j.update(extra);
            emit(j.dump(2) + "\n");
        } else if (cfg_.format == "csv") {
            emit("name,value\n" + command + ",\"" + to_digit_string(v) + "\"\n");
        } else {
            std::string text = to_text(v) + "\n";
            for (const auto &[key, item] : extra.items()) {
                text += key + ": " + (item.is_object() ? to_text(padic_from_json(item)) : item.dump()) + "\n";
            }
            emit(text);
        }
    }

    void series(const std::string &command, const QSeries &f, json extra = json::object())
    {
        if (cfg_.format == "json") {
            json j = header(command);
            j["series"] = to_json(f);
            j.update(extra);
            emit(j.dump(2) + "\n");
        } else if (cfg_.format == "csv") {
            emit(to_csv(f));
        } else {
            std::ostringstream text;
            text << "# " << to_string(f.meta()) << " q-expansion, p = " << f.prime() << ", order " << f.order()
                 << "\n";
            for (int i = 0; i <= f.order(); ++i) {
                text << "q^" << i << ": " << to_text(f[static_cast<std::size_t>(i)]) << "\n";
            }
            for (const auto &[key, item] : extra.items()) {
                text << key << ": " << item.dump() << "\n";
            }
            emit(text.str());
        }
    }

    void rational_series(const RationalQSeries &f)
    {
        if (cfg_.format == "json") {
            json j = header("classical");
            j["coeffs"] = json::array();
            for (const auto &c : f.coeffs) {
                j["coeffs"].push_back(c.get_str());
            }
            emit(j.dump(2) + "\n");
        } else if (cfg_.format == "csv") {
            std::string text = "n,value\n";
            for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
                text += std::to_string(i) + "," + f.coeffs[i].get_str() + "\n";
            }
            emit(text);
        } else {
            std::string text;
            for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
                text += "q^" + std::to_string(i) + ": " + f.coeffs[i].get_str() + "\n";
            }
            emit(text);
        }
    }

    void raw(const std::string &text)
    {
        emit(text);
    }

private:
    json header(const std::string &command) const
    {
        return json{{"schema", json_schema_version}, {"command", command}, {"prime", cfg_.p}, {"prec", cfg_.prec}};
    }

    void emit(const std::string &text) const
    {
        if (cfg_.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(cfg_.out, std::ios::binary);
        if (!file) {
            throw DomainError("cannot write " + cfg_.out);
        }
        file << text;
    }

    const Config &cfg_;
};

Route parse_route(const std::string &name)
{
    return name == "integral" ? Route::integral : Route::series;
}

void cmd_zeta(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    const VolkenbornOptions opts = options(cfg);
    if (cfg.u) {
        const PadicNumber x = cfg.x.empty() ? PadicNumber::zero(cfg.p) : arg(cfg, cfg.x, "x");
        out.value("zeta", zeta_p_chi(s, TeichCharacter(cfg.p, *cfg.u), x, cfg.prec, opts));
        return;
    }
    const PadicNumber x = arg(cfg, cfg.x, "x");
    if (cfg.route == "both") {
        const PadicNumber integral = zeta_p(s, x, cfg.prec, Route::integral, opts);
        const PadicNumber series = zeta_p(s, x, cfg.prec, Route::series, opts);
        const int agree = agreement_valuation(integral, series);
        out.value("zeta", series,
                  json{{"integral", to_json(integral)},
                       {"agreement_valuation", agree == PadicNumber::infinite ? json(nullptr) : json(agree)}});
        return;
    }
    out.value("zeta", zeta_p(s, x, cfg.prec, parse_route(cfg.route), opts));
}

void cmd_lp(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    out.value("lp", l_p(s, TeichCharacter(cfg.p, cfg.u.value_or(0)), cfg.prec, options(cfg)));
}

void cmd_hp(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    out.value("hp", washington_hp(s, cfg.a, cfg.F, cfg.prec));
}

void cmd_family(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    const VolkenbornOptions opts = options(cfg);
    if (cfg.u) {
        const PadicNumber x = cfg.x.empty() ? PadicNumber::zero(cfg.p) : arg(cfg, cfg.x, "x");
        out.series("family", family_chi(s, TeichCharacter(cfg.p, *cfg.u), x, cfg.order, cfg.prec, opts));
        return;
    }
    const PadicNumber x = arg(cfg, cfg.x, "x");
    const QSeries direct = family_sx(s, x, cfg.order, cfg.prec, parse_route(cfg.a0_route), CoefficientRoute::divisor, opts);
    if (cfg.check.empty()) {
        out.series("family", direct);
        return;
    }
    if (cfg.check != "expansion") {
        throw DomainError("--check accepts only 'expansion'");
    }
    const QSeries expanded = expansion_family(s, x, cfg.depth, cfg.order, cfg.prec);
    json agreement = json::array();
    for (int i = 0; i <= cfg.order; ++i) {
        const int v = agreement_valuation(direct[static_cast<std::size_t>(i)], expanded[static_cast<std::size_t>(i)]);
        agreement.push_back(v == PadicNumber::infinite ? json(nullptr) : json(v));
    }
    out.series("family", direct, json{{"expansion_agreement", agreement}});
}

void cmd_expansion(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    const PadicNumber x = arg(cfg, cfg.x, "x");
    out.series("expansion", expansion_family(s, x, cfg.depth, cfg.order, cfg.prec));
}

void cmd_serre(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    out.series("serre", serre_family(s, cfg.u.value_or(0), cfg.order, cfg.prec, options(cfg)));
}

void cmd_classical(const Config &cfg, Output &out)
{
    if (!cfg.k) {
        throw DomainError("missing --k");
    }
    out.rational_series(classical_gk_qexp(*cfg.k, cfg.order));
}

void cmd_epj(const Config &cfg, Output &out)
{
    const PadicNumber s = arg(cfg, cfg.s, "s");
    out.series("epj", e_pj(cfg.j, s, cfg.order, cfg.prec));
}

int cmd_selftest(const Config &cfg, const CLI::App &sub, Output &out)
{
    selftest::Config st;
    if (sub.count("--p") > 0) {
        st.prime = cfg.p;
    }
    if (cfg.level > 0) {
        st.level = cfg.level;
    }
    st.threads = cfg.threads;
    const auto results = selftest::run_all(st);
    bool all = true;
    json report = json::array();
    std::ostringstream table;
    table << std::left << std::setw(4) << "id" << std::setw(32) << "criterion" << std::setw(6) << "pass"
          << std::setw(10) << "seconds"
          << "detail\n";
    for (const auto &r : results) {
        all = all && r.passed;
        report.push_back({{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"seconds", r.seconds},
                          {"limit_seconds", r.limit_seconds},
                          {"detail", r.detail}});
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << r.seconds;
        table << std::left << std::setw(4) << r.id << std::setw(32) << r.name << std::setw(6)
              << (r.passed ? "ok" : "FAIL") << std::setw(10) << secs.str() << r.detail << "\n";
    }
    if (cfg.format == "json") {
        out.raw(json{{"schema", json_schema_version}, {"command", "selftest"}, {"passed", all}, {"criteria", report}}
                    .dump(2)
                + "\n");
    } else {
        out.raw(table.str() + (all ? "all checks passed\n" : "some checks FAILED\n"));
    }
    return all ? ok : selftest_failed;
}

} // namespace

int main(int argc, char **argv)
{
    Config cfg;
    CLI::App app{"p-adic Hurwitz zeta functions and Eisenstein q-expansions"};
    app.require_subcommand(1);
    app.fallthrough();

    try {
        cfg.prec = env_int("PADIC_PREC", cfg.prec);
        cfg.threads = static_cast<unsigned>(std::max(0, env_int("PADIC_THREADS", 0)));
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    }

    app.add_option("--p", cfg.p, "odd prime")->capture_default_str();
    app.add_option("--prec", cfg.prec, "significant p-adic digits (env PADIC_PREC)")->capture_default_str();
    app.add_option("--order", cfg.order, "highest power of q")->capture_default_str();
    app.add_option("--J", cfg.depth, "series depth for the expansions (default: from v_p(x))");
    app.add_option("--levels", cfg.level, "Volkenborn level N (default: by prime)");
    app.add_option("--threads", cfg.threads, "worker threads, 0 = all cores (env PADIC_THREADS)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write output to this file instead of stdout");

    auto *zeta = app.add_subcommand("zeta", "zeta_p(s, x), or zeta_p(s, omega^u, x) with --u");
    zeta->add_option("--s", cfg.s, "s in Z_p")->required();
    zeta->add_option("--x", cfg.x, "x (rational or ...digits)");
    zeta->add_option("--u", cfg.u, "character exponent");
    zeta->add_option("--route", cfg.route, "evaluation route")->check(CLI::IsMember({"integral", "series", "both"}))
        ->capture_default_str();

    auto *lp = app.add_subcommand("lp", "Kubota-Leopoldt L_p(s, omega^u)");
    lp->add_option("--s", cfg.s, "s in Z_p")->required();
    lp->add_option("--u", cfg.u, "character exponent");

    auto *hp = app.add_subcommand("hp", "H_p(s, a, F)");
    hp->add_option("--s", cfg.s, "s in Z_p")->required();
    hp->add_option("--a", cfg.a, "0 < a < F, p not dividing a")->required();
    hp->add_option("--F", cfg.F, "modulus divisible by p")->required();

    auto *family = app.add_subcommand("family", "G*(s, x), or G*(s, omega^u, x) with --u");
    family->add_option("--s", cfg.s, "s in Z_p")->required();
    family->add_option("--x", cfg.x, "x (rational or ...digits)");
    family->add_option("--u", cfg.u, "character exponent");
    family->add_option("--route", cfg.a0_route, "route for the constant term")
        ->check(CLI::IsMember({"integral", "series"}))
        ->capture_default_str();
    family->add_option("--check", cfg.check, "recompute by the named route and report agreement")
        ->check(CLI::IsMember({"expansion"}));

    auto *expansion = app.add_subcommand("expansion", "G*(s, x) from the expansion in powers of 1/x");
    expansion->add_option("--s", cfg.s, "s in Z_p")->required();
    expansion->add_option("--x", cfg.x, "x with |x|_p > 1")->required();

    auto *serre = app.add_subcommand("serre", "Serre's family G*_{s,u}");
    serre->add_option("--s", cfg.s, "s in Z_p")->required();
    serre->add_option("--u", cfg.u, "even character exponent");

    auto *classical = app.add_subcommand("classical", "classical G_k with rational coefficients");
    classical->add_option("--k", cfg.k, "even weight >= 4")->required();

    auto *epj = app.add_subcommand("epj", "e_{p,j}(s)");
    epj->add_option("--j", cfg.j, "index j >= 0")->required();
    epj->add_option("--s", cfg.s, "s in Z_p")->required();

    auto *selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    }

    try {
        validate(cfg);
        Output out(cfg);
        if (zeta->parsed()) {
            cmd_zeta(cfg, out);
        } else if (lp->parsed()) {
            cmd_lp(cfg, out);
        } else if (hp->parsed()) {
            cmd_hp(cfg, out);
        } else if (family->parsed()) {
            cmd_family(cfg, out);
        } else if (expansion->parsed()) {
            cmd_expansion(cfg, out);
        } else if (serre->parsed()) {
            cmd_serre(cfg, out);
        } else if (classical->parsed()) {
            cmd_classical(cfg, out);
        } else if (epj->parsed()) {
            cmd_epj(cfg, out);
        } else if (selftest_cmd->parsed()) {
            return cmd_selftest(cfg, app, out);
        }
    } catch (const PrecisionExhausted &e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return precision_error;
    } catch (const PoleError &e) {
        std::cerr << "pole: " << e.what() << "\n";
        return domain_error;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    }
    return ok;
}
