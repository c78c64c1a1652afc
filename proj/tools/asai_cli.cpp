// Command line front end: exact local factor computation, seeded verification
// suites, and the numeric archimedean checks.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "asai/archimedean.hpp"
#include "asai/errors.hpp"
#include "asai/factors.hpp"
#include "asai/suites.hpp"
#include "asai/textio.hpp"

namespace {

using asai::Cplx;

// Accepts "0.5", "-2", "1+2i", "2-i", "-0.3i", "1e-3+2.5e-1i".
Cplx parse_complex_arg(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw asai::ParseError("empty complex literal");

    auto parse_double = [](const std::string& tok) {
        if (tok.empty() || tok == "+") return 1.0;
        if (tok == "-") return -1.0;
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw asai::ParseError("bad number: " + tok);
        return v;
    };

    size_t split = std::string::npos;
    for (size_t k = 1; k < text.size(); ++k) {
        if ((text[k] == '+' || text[k] == '-') &&
            text[k - 1] != 'e' && text[k - 1] != 'E')
            split = k;
    }
    try {
        if (text.back() == 'i') {
            std::string imag = text.substr(0, text.size() - 1);
            std::string real = "0";
            if (split != std::string::npos) {
                real = text.substr(0, split);
                imag = text.substr(split, text.size() - 1 - split);
            }
            return {parse_double(real), parse_double(imag)};
        }
        return {parse_double(text), 0.0};
    } catch (const std::exception&) {
        throw asai::ParseError("bad complex literal: " + raw);
    }
}

int run_factors(const std::string& config_path) {
    asai::Config cfg = asai::parse_config_file(config_path);
    asai::ConfigCase c = asai::materialize_case(cfg);

    asai::EulerProduct l = asai::asai_l(c.datum, c.rep);
    asai::Monomial eps = asai::asai_epsilon(c.datum, c.rep, c.tau);
    asai::RatFunc gam = asai::asai_gamma(c.datum, c.rep, c.tau);

    std::printf("case=config q=%ld ext=%s n=%ld\n", c.datum.q, asai::ext_name(c.datum.ext),
                c.rep.n);
    std::printf("L = %s\n", asai::euler_to_string(l).c_str());
    std::printf("epsilon = %s\n", asai::monomial_to_string(eps).c_str());
    std::printf("gamma = %s\n", asai::ratfunc_to_string(gam).c_str());
    std::string poles = "[";
    bool first = true;
    for (Cplx s : asai::pole_locations(l, c.datum.q)) {
        if (!first) poles += ", ";
        poles += asai::format_complex(s);
        first = false;
    }
    poles += "]";
    std::printf("poles = %s\n", poles.c_str());
    return 0;
}

int run_verify(const std::string& suite, const asai::SuiteOptions& opts) {
    asai::SuiteResult res = asai::run_suite(suite, opts);
    for (const asai::VerifyReport& rep : res.reports)
        std::printf("%s\n", asai::render_record(rep).c_str());
    std::fprintf(stderr, "suite=%s cases=%zu failures=%ld\n", suite.c_str(),
                 res.reports.size(), res.failures);
    return res.all_pass() ? 0 : 1;
}

int run_tate(const std::string& char_name, const std::string& s_text,
             const std::string& testfn_name) {
    long k = char_name == "sgn" ? 1 : 0;
    asai::ArchCharacter chi = asai::make_arch_character(asai::ArchField::R, k, 0.0);
    asai::TestFn f = k == 0 ? asai::TestFn::gaussian : asai::TestFn::x_gaussian;
    if (testfn_name == "gaussian") f = asai::TestFn::gaussian;
    else if (testfn_name == "x_gaussian") f = asai::TestFn::x_gaussian;
    else if (!testfn_name.empty())
        throw asai::ParseError("unknown test function: " + testfn_name);

    Cplx s = parse_complex_arg(s_text);
    Cplx z = asai::tate_zeta(chi, f, s);
    Cplx g = asai::tate_gamma(chi, s);
    double residual = asai::tate_fe_residual(chi, f, s);
    std::printf("Z = %s\n", asai::format_complex(z).c_str());
    std::printf("gamma = %s\n", asai::format_complex(g).c_str());
    std::printf("fe_residual = %.3e\n", residual);
    return 0;
}

int run_contour(double D, const std::string& s_text, double x_max) {
    Cplx s = parse_complex_arg(s_text);
    // Built-in sample function: the entire, even function exp(z^2/4), which
    // decays like exp(-x^2/4) along every vertical line.
    auto f = [](Cplx z) { return std::exp(z * z / 4.0); };
    Cplx got = asai::contour_reconstruct(f, f, D, s, x_max);
    Cplx want = f(s);
    std::printf("reconstructed = %s\n", asai::format_complex(got).c_str());
    std::printf("expected = %s\n", asai::format_complex(want).c_str());
    std::printf("error = %.3e\n", std::abs(got - want));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local Asai factors for unramified representations"};
    app.require_subcommand(1);

    auto* factors = app.add_subcommand("factors", "Print L, epsilon, gamma for one case");
    std::string factors_config;
    factors->add_option("--config", factors_config, "Path to a key=value case file")
        ->required();

    auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
    std::string suite = "all";
    std::string verify_config;
    asai::SuiteOptions opts;
    verify->add_option("--suite", suite, "unramified, fe, identities, twist, or all");
    verify->add_option("--config", verify_config, "Verify a single configured case");
    verify->add_option("--seed", opts.seed, "Generator seed (default 7)");
    verify->add_option("--depth", opts.depth, "Series truncation depth override");
    verify->add_option("--n-max", opts.n_max, "Largest rank in the grid");
    verify->add_option("--tuples", opts.tuples, "Random tuples per grid point");

    auto* tate = app.add_subcommand("tate", "Numeric rank-one zeta over the reals");
    std::string char_name = "trivial";
    std::string s_text;
    std::string testfn_name;
    tate->add_option("--char", char_name, "trivial or sgn");
    tate->add_option("--s", s_text, "Evaluation point, e.g. 0.8+0.3i")->required();
    tate->add_option("--testfn", testfn_name, "gaussian or x_gaussian");

    auto* contour = app.add_subcommand("contour", "Reconstruct a sample function from "
                                                  "two vertical contours");
    double D = 2.0;
    std::string contour_s;
    double x_max = 8.0;
    contour->add_option("--D", D, "Contour abscissa (default 2)");
    contour->add_option("--s", contour_s, "Interior point")->required();
    contour->add_option("--x-max", x_max, "Truncation height (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (factors->parsed()) return run_factors(factors_config);
        if (verify->parsed()) {
            if (!asai::is_suite_name(suite))
                throw asai::ParseError("unknown suite: " + suite);
            if (!verify_config.empty()) opts.config = asai::parse_config_file(verify_config);
            return run_verify(suite, opts);
        }
        if (tate->parsed()) {
            if (char_name != "trivial" && char_name != "sgn")
                throw asai::ParseError("unknown character: " + char_name);
            return run_tate(char_name, s_text, testfn_name);
        }
        if (contour->parsed()) return run_contour(D, contour_s, x_max);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
