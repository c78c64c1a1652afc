#include "asai/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace asai {

namespace {

void check_same_q(long a, long b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + " base mismatch: q=" +
                                    std::to_string(a) + " vs q=" + std::to_string(b));
}

} // namespace

LaurentPoly LaurentPoly::one(long q) { return term(Scalar::one(q), 0); }

LaurentPoly LaurentPoly::term(const Scalar& c, long e) {
    LaurentPoly p(c.q());
    p.add_term(e, c);
    return p;
}

long LaurentPoly::low_exp() const {
    if (coeffs_.empty()) throw std::invalid_argument("low_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::high_exp() const {
    if (coeffs_.empty()) throw std::invalid_argument("high_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Scalar LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Scalar::zero(q_) : it->second;
}

void LaurentPoly::add_term(long e, const Scalar& c) {
    check_same_q(q_, c.q(), "coefficient");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(q_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_q(f.q_, g.q_, "polynomial");
    LaurentPoly r = f;
    for (const auto& [e, c] : g.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_q(f.q_, g.q_, "polynomial");
    LaurentPoly r = f;
    for (const auto& [e, c] : g.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_q(f.q_, g.q_, "polynomial");
    LaurentPoly r(f.q_);
    for (const auto& [ef, cf] : f.coeffs_)
        for (const auto& [eg, cg] : g.coeffs_) r.add_term(ef + eg, cf * cg);
    return r;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& f) {
    return f.scaled_shift(c, 0);
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_q(f.q_, g.q_, "polynomial");
    if (f.coeffs_.size() != g.coeffs_.size()) return false;
    auto it = g.coeffs_.begin();
    for (const auto& [e, c] : f.coeffs_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

LaurentPoly LaurentPoly::scaled_shift(const Scalar& c, long e) const {
    check_same_q(q_, c.q(), "coefficient");
    LaurentPoly r(q_);
    if (c.is_zero()) return r;
    for (const auto& [ef, cf] : coeffs_) r.coeffs_.emplace(ef + e, cf * c);
    return r;
}

Monomial::Monomial(Scalar coeff, long exp) : c(std::move(coeff)), e(exp) {
    if (c.is_zero()) throw std::invalid_argument("monomial with zero coefficient");
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    check_same_q(num_.q(), den_.q(), "rational function");
    if (den_.is_zero()) throw ArithError("rational function with zero denominator");
    long shift = den_.low_exp();
    Scalar lead = den_.coeff(shift);
    Scalar scale = lead.inv();
    den_ = den_.scaled_shift(scale, -shift);
    num_ = num_.scaled_shift(scale, -shift);
}

RatFunc RatFunc::from_poly(LaurentPoly p) {
    long q = p.q();
    return RatFunc(std::move(p), LaurentPoly::one(q));
}

RatFunc RatFunc::from_monomial(const Monomial& m) { return from_poly(m.poly()); }

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw ArithError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

std::optional<Monomial> RatFunc::as_monomial() const {
    if (num_.is_zero()) return std::nullopt;
    if (num_.term_count() != den_.term_count()) return std::nullopt;
    long e = num_.low_exp() - den_.low_exp();
    Scalar c = num_.coeff(num_.low_exp()) / den_.coeff(den_.low_exp());
    if (num_ == den_.scaled_shift(c, e)) return Monomial(c, e);
    return std::nullopt;
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
    return f.num() * g.den() == g.num() * f.den();
}

EulerProduct::EulerProduct(long q, std::vector<std::pair<Scalar, long>> factors)
    : q_(q) {
    for (const auto& [alpha, m] : factors) push(alpha, m);
}

void EulerProduct::push(const Scalar& alpha, long m) {
    check_same_q(q_, alpha.q(), "euler factor");
    if (m <= 0) throw std::invalid_argument("euler factor with nonpositive X power");
    if (alpha.is_zero()) return;
    auto less = [](const std::pair<Scalar, long>& a, const std::pair<Scalar, long>& b) {
        if (a.second != b.second) return a.second < b.second;
        return Scalar::cmp(a.first, b.first) < 0;
    };
    std::pair<Scalar, long> f{alpha, m};
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), f, less),
                    std::move(f));
}

bool operator==(const EulerProduct& a, const EulerProduct& b) {
    check_same_q(a.q_, b.q_, "euler product");
    if (a.factors_.size() != b.factors_.size()) return false;
    for (size_t k = 0; k < a.factors_.size(); ++k) {
        if (a.factors_[k].second != b.factors_[k].second) return false;
        if (a.factors_[k].first != b.factors_[k].first) return false;
    }
    return true;
}

RatFunc EulerProduct::to_ratfunc() const {
    LaurentPoly den = LaurentPoly::one(q_);
    for (const auto& [alpha, m] : factors_) {
        LaurentPoly f = LaurentPoly::one(q_);
        f.add_term(m, -alpha);
        den = den * f;
    }
    return RatFunc(LaurentPoly::one(q_), std::move(den));
}

bool operator==(const SeriesTruncation& a, const SeriesTruncation& b) {
    check_same_q(a.q, b.q, "series");
    if (a.c.size() != b.c.size()) return false;
    for (size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] != b.c[k]) return false;
    return true;
}

SeriesTruncation series_expand(const RatFunc& f, long depth) {
    if (depth < 0) throw std::invalid_argument("negative series depth");
    long q = f.q();
    if (!f.num().is_zero() && f.num().low_exp() < 0)
        throw ArithError("not a power series: numerator has exponent X^" +
                         std::to_string(f.num().low_exp()));
    SeriesTruncation s{q, {}};
    s.c.reserve(depth + 1);
    // den = 1 + sum_{j>=1} d_j X^j after normalization, so
    // c_k = num_k - sum_{j=1..k} d_j c_{k-j}.
    for (long k = 0; k <= depth; ++k) {
        Scalar ck = f.num().coeff(k);
        for (const auto& [j, dj] : f.den().terms()) {
            if (j < 1) continue;
            if (j > k) break;
            ck = ck - dj * s.c[k - j];
        }
        s.c.push_back(ck);
    }
    return s;
}

SeriesTruncation series_expand(const EulerProduct& p, long depth) {
    return series_expand(p.to_ratfunc(), depth);
}

LaurentPoly subst_one_minus_s(const LaurentPoly& p) {
    LaurentPoly r(p.q());
    for (const auto& [e, c] : p.terms())
        r.add_term(-e, c * Scalar::q_half_pow(p.q(), -2 * e));
    return r;
}

Monomial subst_one_minus_s(const Monomial& m) {
    return Monomial(m.c * Scalar::q_half_pow(m.c.q(), -2 * m.e), -m.e);
}

RatFunc subst_one_minus_s(const RatFunc& f) {
    return RatFunc(subst_one_minus_s(f.num()), subst_one_minus_s(f.den()));
}

std::optional<long> first_mismatch(const SeriesTruncation& a, const SeriesTruncation& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("series depth mismatch");
    for (size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] != b.c[k]) return static_cast<long>(k);
    return std::nullopt;
}

std::optional<long> first_mismatch(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end()) return ia->first;
        if (ia == a.terms().end()) return ib->first;
        if (ia->first != ib->first) return std::min(ia->first, ib->first);
        if (ia->second != ib->second) return ia->first;
        ++ia, ++ib;
    }
    return std::nullopt;
}

} // namespace asai
