#include "asai/repdata.hpp"

#include <stdexcept>

namespace asai {

const char* ext_name(ExtType ext) {
    switch (ext) {
    case ExtType::split: return "split";
    case ExtType::inert_unramified: return "inert_unramified";
    case ExtType::inert_ramified: return "inert_ramified";
    }
    return "?";
}

LocalDatum make_local_datum(long q, ExtType ext) {
    if (!is_prime_power(q))
        throw std::invalid_argument("residue cardinality must be a prime power >= 2, got " +
                                    std::to_string(q));
    return LocalDatum{q, ext};
}

UnramifiedRep make_unramified_rep(const LocalDatum& datum, std::vector<Scalar> satake,
                                  std::vector<Scalar> satake2) {
    if (satake.empty()) throw std::invalid_argument("empty Satake parameter tuple");
    long n = static_cast<long>(satake.size());
    if (datum.ext == ExtType::split) {
        if (satake2.size() != satake.size())
            throw std::invalid_argument("split representation needs two Satake tuples "
                                        "of equal length");
    } else if (!satake2.empty()) {
        throw std::invalid_argument("second Satake tuple only applies to the split case");
    }
    auto check = [&](const std::vector<Scalar>& t) {
        for (const Scalar& a : t) {
            if (a.q() != datum.q)
                throw std::invalid_argument("Satake parameter base mismatch with datum");
            if (a.is_zero())
                throw std::invalid_argument("Satake parameters must be nonzero");
        }
    };
    check(satake);
    check(satake2);
    return UnramifiedRep{n, std::move(satake), std::move(satake2)};
}

UnramifiedRep contragredient(const UnramifiedRep& rep) {
    UnramifiedRep dual = rep;
    for (Scalar& a : dual.satake) a = a.inv();
    for (Scalar& a : dual.satake2) a = a.inv();
    return dual;
}

TauDatum make_tau(long d, const GaussRational& lam) {
    if (d < 0) throw std::invalid_argument("twist valuation must be >= 0");
    GaussRational one(1), i = GaussRational::unit_i();
    if (lam != one && lam != -one && lam != i && lam != -i)
        throw std::invalid_argument("lambda must be a fourth root of unity");
    return TauDatum{d, lam};
}

Scalar central_char_value(const UnramifiedRep& rep, const LocalDatum& datum, long v) {
    if (datum.ext == ExtType::split)
        throw std::invalid_argument("central character at a uniformizer power is only "
                                    "defined in the inert cases");
    Scalar w = Scalar::one(datum.q);
    for (const Scalar& a : rep.satake) w = w * a;
    return w.pow(v);
}

namespace {

long torus_exponent(const std::vector<long>& lam) {
    long n = static_cast<long>(lam.size());
    long s = 0;
    for (long i = 1; i <= n; ++i) s += (n + 1 - 2 * i) * lam[i - 1];
    return s;
}

} // namespace

Scalar delta_value(const LocalDatum& datum, BaseField field, const std::vector<long>& lam) {
    long s = torus_exponent(lam);
    long e = field == BaseField::F ? -s : -2 * s;
    return Scalar::from_rat(datum.q, rat_qpow(datum.q, e));
}

Scalar delta_sqrt(const LocalDatum& datum, BaseField field, const std::vector<long>& lam) {
    long s = torus_exponent(lam);
    if (field == BaseField::E) return Scalar::from_rat(datum.q, rat_qpow(datum.q, -s));
    return Scalar::q_half_pow(datum.q, -s);
}

} // namespace asai
