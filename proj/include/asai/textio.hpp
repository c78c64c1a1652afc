#ifndef ASAI_TEXTIO_HPP
#define ASAI_TEXTIO_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "asai/laurent.hpp"
#include "asai/repdata.hpp"
#include "asai/zeta.hpp"

namespace asai {

// Canonical text form of scalars:
//   rat    := '-'? digits ('/' digits)?
//   term   := rat | [rat '*'] 'i' | [rat '*'] 'sqrtq' | [rat '*'] 'i*sqrtq'
//   scalar := term (('+'|'-') term)* | '0'
// Printing emits the components in the fixed order rational, i, sqrtq,
// i*sqrtq, omits zero components and unit coefficients, and never emits
// spaces, so equal scalars print identically.
std::string rat_to_string(const Rat& r);
std::string gauss_to_string(const GaussRational& g);
std::string scalar_to_string(const Scalar& s);

Rat parse_rat(const std::string& text);
Scalar parse_scalar(const std::string& text, long q);

std::string monomial_to_string(const Monomial& m);
std::string laurent_to_string(const LaurentPoly& p);
std::string ratfunc_to_string(const RatFunc& f);
std::string euler_to_string(const EulerProduct& p);
std::string series_to_string(const SeriesTruncation& s);

std::string format_complex(std::complex<double> z);

ExtType parse_ext(const std::string& text);

// One line per verified case:
//   case=<id> q=<q> ext=<ext|-> n=<n> status=<pass|fail>
// followed by mismatch_degree/lhs/rhs when the case failed with a located
// coefficient mismatch.
std::string render_record(const VerifyReport& rep);

// Flat key=value configuration with '#' comments and comma-separated lists.
struct Config {
    long q = 5;
    ExtType ext = ExtType::inert_unramified;
    long n = 1;
    std::vector<std::string> satake;
    std::vector<std::string> satake2;
    std::optional<long> tau_valuation;
    GaussRational lambda_ef = GaussRational(1);
    long depth = kDefaultSeriesDepth;
    unsigned long long seed = 7;
    std::vector<std::string> keys_seen;

    bool has(const std::string& key) const;
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::string& path);

// A fully materialized local case from a configuration.
struct ConfigCase {
    LocalDatum datum;
    UnramifiedRep rep;
    TauDatum tau;
    long depth;
};

ConfigCase materialize_case(const Config& cfg);

} // namespace asai

#endif
