#include "asai/schur.hpp"

#include <stdexcept>
#include <string>

namespace asai {

SchurEvaluator::SchurEvaluator(std::vector<Scalar> params)
    : params_(std::move(params)),
      q_(params_.empty() ? 0 : params_.front().q()),
      zero_(Scalar::zero(params_.empty() ? 2 : params_.front().q())) {
    if (params_.empty()) throw std::invalid_argument("empty parameter tuple");
    for (const Scalar& t : params_)
        if (t.q() != q_) throw std::invalid_argument("parameter tuple mixes scalar bases");

    // e_0..e_n from prod_i (1 + t_i y)
    elem_.assign(1, Scalar::one(q_));
    for (const Scalar& t : params_) {
        std::vector<Scalar> next(elem_.size() + 1, Scalar::zero(q_));
        for (size_t k = 0; k < elem_.size(); ++k) {
            next[k] = next[k] + elem_[k];
            next[k + 1] = next[k + 1] + elem_[k] * t;
        }
        elem_ = std::move(next);
    }
    hom_.assign(1, Scalar::one(q_));
}

const Scalar& SchurEvaluator::complete_homogeneous(long k) const {
    if (k < 0) return zero_;
    long n = arity();
    while (static_cast<long>(hom_.size()) <= k) {
        long m = static_cast<long>(hom_.size());
        // h_m = sum_{j=1..n} (-1)^{j-1} e_j h_{m-j}
        Scalar h = Scalar::zero(q_);
        for (long j = 1; j <= n && j <= m; ++j) {
            Scalar term = elem_[j] * hom_[m - j];
            h = (j % 2 == 1) ? h + term : h - term;
        }
        hom_.push_back(h);
    }
    return hom_[k];
}

Scalar determinant(std::vector<std::vector<Scalar>> m, long q) {
    long n = static_cast<long>(m.size());
    Scalar det = Scalar::one(q);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long row = col; row < n; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Scalar::zero(q);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        Scalar inv = m[col][col].inv();
        for (long row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Scalar f = m[row][col] * inv;
            for (long c2 = col; c2 < n; ++c2) m[row][c2] = m[row][c2] - f * m[col][c2];
        }
    }
    return det;
}

namespace {

// Strips trailing zeros; rejects tuples that are not partitions or have more
// nonzero parts than there are parameters.
Partition checked_shape(const Partition& lam, long arity) {
    if (!is_partition(lam))
        throw std::invalid_argument("not a partition: parts must be weakly decreasing and >= 0");
    Partition s = lam;
    while (!s.empty() && s.back() == 0) s.pop_back();
    if (static_cast<long>(s.size()) > arity)
        throw std::invalid_argument("partition has " + std::to_string(s.size()) +
                                    " nonzero parts but only " + std::to_string(arity) +
                                    " parameters");
    return s;
}

} // namespace

Scalar SchurEvaluator::jacobi_trudi(const Partition& lam) const {
    Partition s = checked_shape(lam, arity());
    long m = static_cast<long>(s.size());
    if (m == 0) return Scalar::one(q_);
    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(m, Scalar::zero(q_)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) a[i][j] = complete_homogeneous(s[i] - i + j);
    return determinant(std::move(a), q_);
}

Scalar SchurEvaluator::bialternant(const Partition& lam) const {
    Partition s = checked_shape(lam, arity());
    long n = arity();
    s.resize(n, 0);
    Scalar vandermonde = Scalar::one(q_);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            if (params_[i] == params_[j])
                throw std::invalid_argument(
                    "bialternant needs pairwise distinct parameters; use jacobi_trudi");
            vandermonde = vandermonde * (params_[i] - params_[j]);
        }
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero(q_)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = params_[i].pow(s[j] + n - 1 - j);
    return determinant(std::move(a), q_) / vandermonde;
}

Scalar schur_value(const Partition& lam, const std::vector<Scalar>& params) {
    return SchurEvaluator(params).jacobi_trudi(lam);
}

EulerProduct identity_product(SchurIdentity kind, const std::vector<Scalar>& t,
                              const std::vector<Scalar>* u) {
    if (t.empty()) throw std::invalid_argument("empty parameter tuple");
    long q = t.front().q();
    long n = static_cast<long>(t.size());
    EulerProduct p(q);
    switch (kind) {
    case SchurIdentity::cauchy: {
        if (u == nullptr || u->empty())
            throw std::invalid_argument("cauchy identity needs a second parameter tuple");
        for (const Scalar& a : t)
            for (const Scalar& b : *u) p.push(a * b, 1);
        break;
    }
    case SchurIdentity::littlewood: {
        for (const Scalar& a : t) p.push(a, 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) p.push(t[i] * t[j], 2);
        break;
    }
    case SchurIdentity::littlewood_even: {
        for (const Scalar& a : t) p.push(a * a, 1);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) p.push(t[i] * t[j], 1);
        break;
    }
    }
    return p;
}

IdentityReport identity_check(SchurIdentity kind, const std::vector<Scalar>& t,
                              const std::vector<Scalar>* u, long depth) {
    EulerProduct product = identity_product(kind, t, u);
    long q = product.q();
    SeriesTruncation closed = series_expand(product, depth);

    SchurEvaluator ev_t(t);
    std::optional<SchurEvaluator> ev_u;
    if (kind == SchurIdentity::cauchy) ev_u.emplace(*u);

    long max_parts = ev_t.arity();
    if (ev_u) max_parts = std::min(max_parts, ev_u->arity());

    SeriesTruncation summed{q, std::vector<Scalar>(depth + 1, Scalar::zero(q))};
    for (long k = 0; k <= depth; ++k) {
        for (const Partition& lam : partitions_of(k, max_parts)) {
            Scalar term = Scalar::zero(q);
            switch (kind) {
            case SchurIdentity::cauchy:
                term = ev_t.jacobi_trudi(lam) * ev_u->jacobi_trudi(lam);
                break;
            case SchurIdentity::littlewood:
                term = ev_t.jacobi_trudi(lam);
                break;
            case SchurIdentity::littlewood_even:
                term = ev_t.jacobi_trudi(doubled(lam));
                break;
            }
            summed.c[k] = summed.c[k] + term;
        }
    }

    IdentityReport rep{kind, depth, true, std::nullopt, std::nullopt, std::nullopt};
    if (auto bad = first_mismatch(summed, closed)) {
        rep.match = false;
        rep.mismatch_degree = *bad;
        rep.lhs = summed.c[*bad];
        rep.rhs = closed.c[*bad];
    }
    return rep;
}

} // namespace asai
