#include "asai/zeta.hpp"

#include <utility>

namespace asai {

SeriesTruncation zeta_series(const LocalDatum& datum, const UnramifiedRep& rep, long depth) {
    if (depth < 0) throw std::invalid_argument("negative truncation depth");
    WhittakerEvaluator w(datum, rep);
    SeriesTruncation z{datum.q, std::vector<Scalar>(depth + 1, Scalar::zero(datum.q))};
    for (long k = 0; k <= depth; ++k)
        for (const Partition& lam : partitions_of(k, rep.n))
            z.c[k] = z.c[k] + w.value(lam) * delta_value(datum, BaseField::F, lam).inv();
    return z;
}

VerifyReport verify_unramified_identity(const LocalDatum& datum, const UnramifiedRep& rep,
                                        long depth, std::string case_id) {
    SeriesTruncation lattice = zeta_series(datum, rep, depth);
    SeriesTruncation closed = series_expand(asai_l(datum, rep), depth);
    VerifyReport rep_out{std::move(case_id), datum.q,      datum.ext,    rep.n,
                         true,               std::nullopt, std::nullopt, std::nullopt};
    if (auto bad = first_mismatch(lattice, closed)) {
        rep_out.pass = false;
        rep_out.mismatch_degree = *bad;
        rep_out.lhs = lattice.c[*bad];
        rep_out.rhs = closed.c[*bad];
    }
    return rep_out;
}

namespace {

// The normalizing monomial on the closed-form side of the functional
// equation. Split data carry no twist dependence.
Monomial fe_prefactor(const LocalDatum& datum, const UnramifiedRep& rep, const TauDatum& tau) {
    if (datum.ext == ExtType::split) return Monomial::one(datum.q);
    long n = rep.n;
    long kk = n * (n - 1) / 2;
    long f = datum.ext == ExtType::inert_unramified ? 2 : 1;
    Scalar c = central_char_value(rep, datum, tau.d).pow(n - 1);
    c = c * Scalar::q_half_pow(datum.q, f * tau.d * kk);
    c = c * Scalar::from_gauss(datum.q, tau.lam.pow(-kk));
    return Monomial(c, f * tau.d * kk);
}

} // namespace

VerifyReport verify_functional_equation(const LocalDatum& datum, const UnramifiedRep& rep,
                                        const TauDatum& tau, std::string case_id) {
    RatFunc l = asai_l(datum, rep).to_ratfunc();
    RatFunc l_dual_sub = subst_one_minus_s(asai_l(datum, contragredient(rep)).to_ratfunc());
    RatFunc gamma = asai_gamma(datum, rep, tau);
    Monomial pre = fe_prefactor(datum, rep, tau);

    VerifyReport out{std::move(case_id), datum.q,      datum.ext,    rep.n,
                     true,               std::nullopt, std::nullopt, std::nullopt};

    Monomial cancel = pre * asai_epsilon(datum, rep, tau);
    if (!(cancel == Monomial::one(datum.q))) {
        out.pass = false;
        out.mismatch_degree = cancel.e;
        out.lhs = cancel.c;
        out.rhs = Scalar::one(datum.q);
        return out;
    }

    RatFunc rhs = RatFunc::from_monomial(pre) * gamma * l;
    LaurentPoly cross_l = l_dual_sub.num() * rhs.den();
    LaurentPoly cross_r = rhs.num() * l_dual_sub.den();
    if (auto bad = first_mismatch(cross_l, cross_r)) {
        out.pass = false;
        out.mismatch_degree = *bad;
        out.lhs = cross_l.coeff(*bad);
        out.rhs = cross_r.coeff(*bad);
    }
    return out;
}

VerifyReport twist_covariance_check(const LocalDatum& datum, const UnramifiedRep& rep,
                                    long m, long depth, std::string case_id) {
    if (m < 0) throw std::invalid_argument("twist valuation must be >= 0");
    long n = rep.n;
    std::vector<long> nu(n);
    for (long i = 0; i < n; ++i) nu[i] = m * (n - 1 - i);
    long nu_weight = partition_weight(nu);

    WhittakerEvaluator w(datum, rep);
    LaurentPoly lhs(datum.q);
    for (long k = 0; k <= depth; ++k) {
        for (const Partition& rho : partitions_of(k, n)) {
            std::vector<long> shifted(n);
            for (long i = 0; i < n; ++i) shifted[i] = rho[i] - nu[i];
            lhs.add_term(k - nu_weight,
                         w.value(rho) * delta_value(datum, BaseField::F, shifted).inv());
        }
    }

    SeriesTruncation z = zeta_series(datum, rep, depth);
    Scalar scale = delta_value(datum, BaseField::F, nu);
    LaurentPoly rhs(datum.q);
    for (long k = 0; k <= depth; ++k) rhs.add_term(k - nu_weight, scale * z.c[k]);

    VerifyReport out{std::move(case_id), datum.q,      datum.ext,    n,
                     true,               std::nullopt, std::nullopt, std::nullopt};
    if (auto bad = first_mismatch(lhs, rhs)) {
        out.pass = false;
        out.mismatch_degree = *bad;
        out.lhs = lhs.coeff(*bad);
        out.rhs = rhs.coeff(*bad);
    }
    return out;
}

} // namespace asai
