#include "asai/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace asai {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

namespace {

// One component of a scalar: coefficient plus symbolic part.
void append_term(std::string& out, const Rat& coeff, const char* symbol) {
    if (coeff == 0) return;
    Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    if (out.empty()) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? '-' : '+';
    }
    if (symbol[0] == '\0') {
        out += mag.get_str();
        return;
    }
    if (mag != 1) {
        out += mag.get_str();
        out += '*';
    }
    out += symbol;
}

bool is_compound(const std::string& s) {
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-') return true;
    return false;
}

std::string maybe_paren(const std::string& s) {
    return is_compound(s) ? "(" + s + ")" : s;
}

} // namespace

std::string gauss_to_string(const GaussRational& g) {
    std::string out;
    append_term(out, g.re(), "");
    append_term(out, g.im(), "i");
    return out.empty() ? "0" : out;
}

std::string scalar_to_string(const Scalar& s) {
    std::string out;
    append_term(out, s.rational_part().re(), "");
    append_term(out, s.rational_part().im(), "i");
    append_term(out, s.sqrt_part().re(), "sqrtq");
    append_term(out, s.sqrt_part().im(), "i*sqrtq");
    return out.empty() ? "0" : out;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    size_t pos = 0;
    if (text[pos] == '-') ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw ParseError("malformed rational '" + text + "'");
    if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError("malformed rational '" + text + "'");
        ++pos;
        size_t den_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0 || pos != text.size())
            throw ParseError("malformed rational '" + text + "'");
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

Scalar parse_scalar(const std::string& text, long q) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");

    GaussRational a, b;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        Rat sign(1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (first && s[pos] == '+') throw ParseError("malformed scalar '" + text + "'");
            if (s[pos] == '-') sign = -1;
            ++pos;
            if (pos == s.size()) throw ParseError("malformed scalar '" + text + "'");
        } else if (!first) {
            throw ParseError("malformed scalar '" + text + "'");
        }
        first = false;

        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw ParseError("malformed scalar '" + text + "'");

        // split on '*'
        std::vector<std::string> parts;
        size_t start = 0;
        while (true) {
            size_t star = term.find('*', start);
            if (star == std::string::npos) {
                parts.push_back(term.substr(start));
                break;
            }
            parts.push_back(term.substr(start, star - start));
            start = star + 1;
        }

        Rat coeff(1);
        bool has_i = false, has_sqrt = false;
        size_t idx = 0;
        if (idx < parts.size() && parts[idx] != "i" && parts[idx] != "sqrtq") {
            coeff = parse_rat(parts[idx]);
            ++idx;
        }
        if (idx < parts.size() && parts[idx] == "i") {
            has_i = true;
            ++idx;
        }
        if (idx < parts.size() && parts[idx] == "sqrtq") {
            has_sqrt = true;
            ++idx;
        }
        if (idx != parts.size()) throw ParseError("malformed scalar term '" + term + "'");
        coeff = sign * coeff;

        GaussRational g = has_i ? GaussRational(Rat(0), coeff) : GaussRational(coeff, Rat(0));
        if (has_sqrt)
            b = b + g;
        else
            a = a + g;
    }
    return Scalar::make(q, a, b);
}

std::string monomial_to_string(const Monomial& m) {
    std::string c = maybe_paren(scalar_to_string(m.c));
    if (m.e == 0) return c;
    return c + " * X^" + std::to_string(m.e);
}

std::string laurent_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = maybe_paren(scalar_to_string(c));
        if (e == 0)
            out += cs;
        else
            out += cs + " * X^" + std::to_string(e);
    }
    return out;
}

std::string ratfunc_to_string(const RatFunc& f) {
    return "(" + laurent_to_string(f.num()) + ") / (" + laurent_to_string(f.den()) + ")";
}

std::string euler_to_string(const EulerProduct& p) {
    if (p.factors().empty()) return "1";
    std::string out = "prod";
    for (const auto& [alpha, m] : p.factors()) {
        out += " (1 - " + maybe_paren(scalar_to_string(alpha)) + " X^" +
               std::to_string(m) + ")^-1";
    }
    return out;
}

std::string series_to_string(const SeriesTruncation& s) {
    std::string out = "[";
    for (size_t k = 0; k < s.c.size(); ++k) {
        if (k > 0) out += ", ";
        out += scalar_to_string(s.c[k]);
    }
    return out + "]";
}

std::string format_complex(std::complex<double> z) {
    char buf[64];
    std::string out;
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
    out = buf;
    if (z.imag() != 0) {
        std::snprintf(buf, sizeof buf, "%+.12gi", z.imag());
        out += buf;
    }
    return out;
}

ExtType parse_ext(const std::string& text) {
    if (text == "split") return ExtType::split;
    if (text == "inert_unramified") return ExtType::inert_unramified;
    if (text == "inert_ramified") return ExtType::inert_ramified;
    throw ParseError("unknown extension type '" + text +
                     "' (expected split, inert_unramified or inert_ramified)");
}

std::string render_record(const VerifyReport& rep) {
    std::string out = "case=" + rep.case_id + " q=" + std::to_string(rep.q) +
                      " ext=" + (rep.ext ? ext_name(*rep.ext) : "-") +
                      " n=" + std::to_string(rep.n) +
                      " status=" + (rep.pass ? "pass" : "fail");
    if (!rep.pass && rep.mismatch_degree) {
        out += " mismatch_degree=" + std::to_string(*rep.mismatch_degree);
        if (rep.lhs) out += " lhs=" + scalar_to_string(*rep.lhs);
        if (rep.rhs) out += " rhs=" + scalar_to_string(*rep.rhs);
    }
    return out;
}

bool Config::has(const std::string& key) const {
    return std::find(keys_seen.begin(), keys_seen.end(), key) != keys_seen.end();
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            break;
        }
        out.push_back(trim(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("key '" + key + "': expected an integer, got '" + value + "'");
    }
}

} // namespace

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected key=value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");

        if (key == "q") {
            cfg.q = parse_long(key, value);
            if (!is_prime_power(cfg.q))
                throw ParseError("key 'q': " + value + " is not a prime power >= 2");
        } else if (key == "extension") {
            try {
                cfg.ext = parse_ext(value);
            } catch (const ParseError& e) {
                throw ParseError("key 'extension': " + std::string(e.what()));
            }
        } else if (key == "n") {
            cfg.n = parse_long(key, value);
            if (cfg.n < 1) throw ParseError("key 'n': must be >= 1");
        } else if (key == "satake") {
            cfg.satake = split_list(value);
        } else if (key == "satake2") {
            cfg.satake2 = split_list(value);
        } else if (key == "tau_valuation") {
            long d = parse_long(key, value);
            if (d < 0) throw ParseError("key 'tau_valuation': must be >= 0");
            cfg.tau_valuation = d;
        } else if (key == "lambda_ef") {
            if (value == "1")
                cfg.lambda_ef = GaussRational(1);
            else if (value == "-1")
                cfg.lambda_ef = GaussRational(-1);
            else if (value == "i")
                cfg.lambda_ef = GaussRational::unit_i();
            else if (value == "-i")
                cfg.lambda_ef = -GaussRational::unit_i();
            else
                throw ParseError("key 'lambda_ef': expected 1, -1, i or -i, got '" +
                                 value + "'");
        } else if (key == "depth") {
            cfg.depth = parse_long(key, value);
            if (cfg.depth < 0) throw ParseError("key 'depth': must be >= 0");
        } else if (key == "seed") {
            try {
                size_t used = 0;
                cfg.seed = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument("");
            } catch (...) {
                throw ParseError("key 'seed': expected an unsigned integer, got '" +
                                 value + "'");
            }
        } else {
            throw ParseError("unknown key '" + key + "'");
        }
        cfg.keys_seen.push_back(key);
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ConfigCase materialize_case(const Config& cfg) {
    LocalDatum datum = make_local_datum(cfg.q, cfg.ext);

    if (cfg.satake.empty()) throw ParseError("key 'satake': missing");
    if (static_cast<long>(cfg.satake.size()) != cfg.n)
        throw ParseError("key 'satake': expected " + std::to_string(cfg.n) +
                         " entries, got " + std::to_string(cfg.satake.size()));
    if (cfg.ext == ExtType::split) {
        if (cfg.satake2.empty()) throw ParseError("key 'satake2': missing for a split case");
        if (static_cast<long>(cfg.satake2.size()) != cfg.n)
            throw ParseError("key 'satake2': expected " + std::to_string(cfg.n) +
                             " entries, got " + std::to_string(cfg.satake2.size()));
    } else if (!cfg.satake2.empty()) {
        throw ParseError("key 'satake2': only applies to split cases");
    }

    auto parse_tuple = [&](const char* key, const std::vector<std::string>& raw) {
        std::vector<Scalar> out;
        for (const std::string& s : raw) {
            try {
                out.push_back(parse_scalar(s, cfg.q));
            } catch (const ParseError& e) {
                throw ParseError("key '" + std::string(key) + "': " + e.what());
            }
        }
        return out;
    };

    std::vector<Scalar> t = parse_tuple("satake", cfg.satake);
    std::vector<Scalar> u = parse_tuple("satake2", cfg.satake2);

    UnramifiedRep rep;
    try {
        rep = make_unramified_rep(datum, std::move(t), std::move(u));
    } catch (const std::invalid_argument& e) {
        throw ParseError("key 'satake': " + std::string(e.what()));
    }

    long d = cfg.tau_valuation.value_or(cfg.ext == ExtType::inert_ramified ? 1 : 0);
    TauDatum tau = make_tau(d, cfg.lambda_ef);

    return ConfigCase{datum, std::move(rep), tau, cfg.depth};
}

} // namespace asai
