#include <doctest.h>

#include "asai/factors.hpp"
#include "asai/textio.hpp"
#include "rng_util.hpp"

using namespace asai;

TEST_CASE("scalar printing is canonical") {
    const long q = 5;
    CHECK(scalar_to_string(Scalar::zero(q)) == "0");
    CHECK(scalar_to_string(Scalar::from_long(q, 2)) == "2");
    CHECK(scalar_to_string(Scalar::from_rat(q, rat_make(-1, 2))) == "-1/2");
    CHECK(scalar_to_string(Scalar::unit_i(q)) == "i");
    CHECK(scalar_to_string(-Scalar::unit_i(q)) == "-i");
    CHECK(scalar_to_string(Scalar::from_long(q, 3) * Scalar::unit_i(q)) == "3*i");
    CHECK(scalar_to_string(Scalar::sqrt_q(q)) == "sqrtq");
    CHECK(scalar_to_string(-Scalar::sqrt_q(q)) == "-sqrtq");
    CHECK(scalar_to_string(Scalar::from_long(q, 2) * Scalar::sqrt_q(q)) == "2*sqrtq");
    CHECK(scalar_to_string(Scalar::q_half_pow(q, -1)) == "1/5*sqrtq");
    Scalar full = Scalar::make(
        q, GaussRational(rat_make(1), rat_make(1)),
        GaussRational(rat_make(-2), rat_make(1, 3)));
    CHECK(scalar_to_string(full) == "1+i-2*sqrtq+1/3*i*sqrtq");
    CHECK(scalar_to_string(Scalar::sqrt_q(9)) == "3");
}

TEST_CASE("scalar parsing") {
    const long q = 5;
    CHECK(parse_scalar("0", q) == Scalar::zero(q));
    CHECK(parse_scalar("7/3", q) == Scalar::from_rat(q, rat_make(7, 3)));
    CHECK(parse_scalar("-i", q) == -Scalar::unit_i(q));
    CHECK(parse_scalar("i*sqrtq", q) == Scalar::unit_i(q) * Scalar::sqrt_q(q));
    CHECK(parse_scalar("1 + i", q) ==
          Scalar::from_gauss(q, GaussRational(rat_make(1), rat_make(1))));
    CHECK(parse_scalar("2/4", q) == Scalar::from_rat(q, rat_make(1, 2)));
    CHECK(parse_scalar("1-2*i+3*sqrtq-4/5*i*sqrtq", q) ==
          Scalar::make(q, GaussRational(rat_make(1), rat_make(-2)),
                       GaussRational(rat_make(3), rat_make(-4, 5))));
    // square q folds the radical while parsing
    CHECK(parse_scalar("sqrtq", 9) == Scalar::from_long(9, 3));
    CHECK(parse_scalar("1+2*sqrtq", 4) == Scalar::from_long(4, 5));

    CHECK_THROWS_AS(parse_scalar("", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("+1", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1++2", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("2i", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("i*i", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("sqrtq*i", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", q), ParseError);
    CHECK_THROWS_AS(parse_scalar("3.5", q), ParseError);
    CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
}

TEST_CASE("printing and parsing are inverse on canonical forms") {
    testutil::Rng rng(2718);
    const long qs[] = {2, 3, 5, 7, 9};
    for (int iter = 0; iter < 500; ++iter) {
        long q = qs[iter % 5];
        Scalar s = rng.scalar(q);
        CHECK(parse_scalar(scalar_to_string(s), q) == s);
    }
}

TEST_CASE("polynomial and product rendering") {
    const long q = 5;
    LocalDatum ram = make_local_datum(q, ExtType::inert_ramified);
    UnramifiedRep r1 = make_unramified_rep(ram, {Scalar::from_long(q, 2)});
    CHECK(euler_to_string(asai_l(ram, r1)) == "prod (1 - 4 X^1)^-1");

    LocalDatum un = make_local_datum(q, ExtType::inert_unramified);
    UnramifiedRep r2 =
        make_unramified_rep(un, {Scalar::from_long(q, 2), Scalar::from_long(q, 3)});
    CHECK(euler_to_string(asai_l(un, r2)) ==
          "prod (1 - 2 X^1)^-1 (1 - 3 X^1)^-1 (1 - 6 X^2)^-1");
    CHECK(euler_to_string(EulerProduct(q)) == "1");

    CHECK(monomial_to_string(Monomial::one(q)) == "1");
    CHECK(monomial_to_string(Monomial(Scalar::from_long(q, -2), 3)) == "-2 * X^3");
    Scalar compound = Scalar::from_gauss(q, GaussRational(rat_make(1), rat_make(1)));
    CHECK(monomial_to_string(Monomial(compound, -1)) == "(1+i) * X^-1");

    LaurentPoly p(q);
    CHECK(laurent_to_string(p) == "0");
    p.add_term(0, Scalar::one(q));
    p.add_term(2, Scalar::from_long(q, 3));
    p.add_term(-1, compound);
    CHECK(laurent_to_string(p) == "(1+i) * X^-1 + 1 + 3 * X^2");

    LaurentPoly num(q), den(q);
    num.add_term(0, Scalar::one(q));
    den.add_term(0, Scalar::one(q));
    den.add_term(1, Scalar::from_long(q, -5));
    CHECK(ratfunc_to_string(RatFunc(num, den)) == "(1) / (1 + -5 * X^1)");

    SeriesTruncation s{q, {Scalar::one(q), Scalar::from_long(q, 4)}};
    CHECK(series_to_string(s) == "[1, 4]");
}

TEST_CASE("complex formatting") {
    CHECK(format_complex({0.5, 0}) == "0.5");
    CHECK(format_complex({1, 2}) == "1+2i");
    CHECK(format_complex({0, -0.25}) == "0-0.25i");
    CHECK(format_complex({-3, 0}) == "-3");
}

TEST_CASE("record rendering") {
    VerifyReport pass{"unramified/split/n2/t0", 5, ExtType::split, 2,
                      true, std::nullopt, std::nullopt, std::nullopt};
    CHECK(render_record(pass) == "case=unramified/split/n2/t0 q=5 ext=split n=2 status=pass");

    VerifyReport fail{"fe/inert_ramified/n1/t3", 3, ExtType::inert_ramified, 1,
                      false, 2, Scalar::from_long(3, 2), Scalar::from_rat(3, rat_make(5, 2))};
    CHECK(render_record(fail) ==
          "case=fe/inert_ramified/n1/t3 q=3 ext=inert_ramified n=1 status=fail "
          "mismatch_degree=2 lhs=2 rhs=5/2");

    VerifyReport noext{"identities/cauchy/n1/t0", 2, std::nullopt, 1,
                       true, std::nullopt, std::nullopt, std::nullopt};
    CHECK(render_record(noext) == "case=identities/cauchy/n1/t0 q=2 ext=- n=1 status=pass");
}

TEST_CASE("config parsing") {
    Config cfg = parse_config_text("# example case\n"
                                   "q = 5\n"
                                   "extension = inert_ramified\n"
                                   "n = 2\n"
                                   "satake = 2, 1/3  # tuple\n"
                                   "tau_valuation = 2\n"
                                   "lambda_ef = -i\n"
                                   "depth = 9\n"
                                   "seed = 11\n");
    CHECK(cfg.q == 5);
    CHECK(cfg.ext == ExtType::inert_ramified);
    CHECK(cfg.n == 2);
    CHECK(cfg.satake == std::vector<std::string>{"2", "1/3"});
    CHECK(cfg.tau_valuation == 2);
    CHECK(cfg.lambda_ef == -GaussRational::unit_i());
    CHECK(cfg.depth == 9);
    CHECK(cfg.seed == 11);
    CHECK(cfg.has("depth"));
    CHECK_FALSE(cfg.has("satake2"));

    ConfigCase c = materialize_case(cfg);
    CHECK(c.datum.q == 5);
    CHECK(c.rep.satake[1] == Scalar::from_rat(5, rat_make(1, 3)));
    CHECK(c.tau.d == 2);
    CHECK(c.depth == 9);
}

TEST_CASE("config error messages name the offending key") {
    auto message_of = [](const std::string& text) {
        try {
            Config cfg = parse_config_text(text);
            materialize_case(cfg);
            return std::string();
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
    };

    CHECK(message_of("qq = 5\n").find("unknown key 'qq'") != std::string::npos);
    CHECK(message_of("q = 6\n").find("'q'") != std::string::npos);
    CHECK(message_of("extension = weird\n").find("'extension'") != std::string::npos);
    CHECK(message_of("n = 0\n").find("'n'") != std::string::npos);
    CHECK(message_of("lambda_ef = 2\n").find("'lambda_ef'") != std::string::npos);
    CHECK(message_of("tau_valuation = -1\n").find("'tau_valuation'") != std::string::npos);
    CHECK(message_of("extension = split\nn = 1\nsatake = 2\n")
              .find("'satake2'") != std::string::npos);
    CHECK(message_of("extension = inert_ramified\nn = 2\nsatake = 2\n")
              .find("'satake'") != std::string::npos);
    CHECK(message_of("extension = inert_ramified\nn = 1\nsatake = bogus\n")
              .find("'satake'") != std::string::npos);
    CHECK(message_of("extension = inert_ramified\nn = 1\nsatake = 0\n")
              .find("'satake'") != std::string::npos);
    CHECK(message_of("no equals sign\n").find("key=value") != std::string::npos);
}

TEST_CASE("config defaults for the twisting datum") {
    Config ram = parse_config_text("extension = inert_ramified\nn = 1\nsatake = 2\n");
    CHECK(materialize_case(ram).tau.d == 1);
    Config un = parse_config_text("extension = inert_unramified\nn = 1\nsatake = 2\n");
    CHECK(materialize_case(un).tau.d == 0);
    CHECK(materialize_case(un).depth == kDefaultSeriesDepth);
}
