#include "asai/factors.hpp"

#include <cmath>

namespace asai {

namespace {

// f with residue_card_ext() == q^f.
long residue_degree(const LocalDatum& datum) {
    return datum.ext == ExtType::inert_unramified ? 2 : 1;
}

} // namespace

EulerProduct asai_l(const LocalDatum& datum, const UnramifiedRep& rep) {
    EulerProduct l(datum.q);
    const auto& t = rep.satake;
    long n = rep.n;
    switch (datum.ext) {
    case ExtType::split:
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) l.push(t[i] * rep.satake2[j], 1);
        break;
    case ExtType::inert_unramified:
        for (long i = 0; i < n; ++i) l.push(t[i], 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) l.push(t[i] * t[j], 2);
        break;
    case ExtType::inert_ramified:
        for (long i = 0; i < n; ++i) l.push(t[i] * t[i], 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) l.push(t[i] * t[j], 1);
        break;
    }
    return l;
}

Monomial asai_epsilon(const LocalDatum& datum, const UnramifiedRep& rep, const TauDatum& tau) {
    if (datum.ext == ExtType::split) return Monomial::one(datum.q);
    long n = rep.n;
    long kk = n * (n - 1) / 2;
    long f = residue_degree(datum);
    Scalar c = Scalar::from_gauss(datum.q, tau.lam.pow(kk));
    c = c * Scalar::q_half_pow(datum.q, -f * tau.d * kk);
    c = c * central_char_value(rep, datum, tau.d).pow(-(n - 1));
    return Monomial(c, -f * tau.d * kk);
}

RatFunc asai_gamma(const LocalDatum& datum, const UnramifiedRep& rep, const TauDatum& tau) {
    RatFunc l = asai_l(datum, rep).to_ratfunc();
    RatFunc l_dual = asai_l(datum, contragredient(rep)).to_ratfunc();
    Monomial eps = asai_epsilon(datum, rep, tau);
    return RatFunc::from_monomial(eps) * subst_one_minus_s(l_dual) * l.inv();
}

Monomial epsilon_scaling(const Monomial& eps, long n, const Scalar& omega_at_scale,
                         long val, int eta_sign) {
    long q = eps.c.q();
    Scalar c = eps.c * omega_at_scale.pow(n) * Scalar::q_half_pow(q, val * n * n);
    if (eta_sign < 0 && (n * (n - 1) / 2) % 2 != 0) c = -c;
    return Monomial(c, eps.e + val * n * n);
}

std::vector<std::complex<double>> pole_locations(const EulerProduct& l, long q) {
    std::vector<std::pair<std::complex<double>, long>> fs;
    for (const auto& [alpha, m] : l.factors()) fs.emplace_back(alpha.to_complex(), m);
    return pole_locations(fs, static_cast<double>(q));
}

std::vector<std::pair<std::complex<double>, long>> asai_l_shape(
    ExtType ext, const std::vector<std::complex<double>>& t,
    const std::vector<std::complex<double>>& u) {
    std::vector<std::pair<std::complex<double>, long>> fs;
    long n = static_cast<long>(t.size());
    switch (ext) {
    case ExtType::split:
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < static_cast<long>(u.size()); ++j)
                fs.emplace_back(t[i] * u[j], 1);
        break;
    case ExtType::inert_unramified:
        for (long i = 0; i < n; ++i) fs.emplace_back(t[i], 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) fs.emplace_back(t[i] * t[j], 2);
        break;
    case ExtType::inert_ramified:
        for (long i = 0; i < n; ++i) fs.emplace_back(t[i] * t[i], 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) fs.emplace_back(t[i] * t[j], 1);
        break;
    }
    return fs;
}

std::vector<std::complex<double>> pole_locations(
    const std::vector<std::pair<std::complex<double>, long>>& factors, double q) {
    std::vector<std::complex<double>> out;
    double lq = std::log(q);
    for (const auto& [alpha, m] : factors)
        out.push_back(std::log(alpha) / (static_cast<double>(m) * lq));
    return out;
}

} // namespace asai
