#ifndef ASAI_SCALAR_HPP
#define ASAI_SCALAR_HPP

#include <complex>

#include "asai/rational.hpp"

namespace asai {

// True iff q is p^k for a prime p and k >= 1.
bool is_prime_power(long q);

// floor(sqrt(q)) if q is a perfect square, 0 otherwise (q >= 2 assumed).
long perfect_square_root(long q);

// Element of Q(i)(sqrt q): a + b*sqrt(q) with a, b in Q(i) and q >= 2 a prime
// power. When q is itself a perfect square, sqrt(q) is rational and every
// value is folded into the a-component at construction, so b == 0 throughout.
//
// The base q is part of the value. Binary operations require both operands to
// carry the same q; mixing bases is a caller bug and throws
// std::invalid_argument.
class Scalar {
public:
    static Scalar zero(long q) { return Scalar(q, GaussRational(0), GaussRational(0)); }
    static Scalar one(long q) { return Scalar(q, GaussRational(1), GaussRational(0)); }
    static Scalar from_long(long q, long v) { return Scalar(q, GaussRational(v), GaussRational(0)); }
    static Scalar from_rat(long q, const Rat& v) { return Scalar(q, GaussRational(v, Rat(0)), GaussRational(0)); }
    static Scalar from_gauss(long q, const GaussRational& a) { return Scalar(q, a, GaussRational(0)); }
    static Scalar unit_i(long q) { return Scalar(q, GaussRational::unit_i(), GaussRational(0)); }
    static Scalar sqrt_q(long q) { return make(q, GaussRational(0), GaussRational(1)); }

    // a + b*sqrt(q), folding sqrt(q) into the rational part when q is square.
    static Scalar make(long q, const GaussRational& a, const GaussRational& b);

    // q^(k/2) for any integer k, e.g. k = -1 gives sqrt(q)/q.
    static Scalar q_half_pow(long q, long k);

    long q() const { return q_; }
    const GaussRational& rational_part() const { return a_; }
    const GaussRational& sqrt_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_gaussian() const { return b_.is_zero(); }

    Scalar conj_sqrt() const { return Scalar(q_, a_, -b_); }
    Scalar operator-() const { return Scalar(q_, -a_, -b_); }

    Scalar inv() const;
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        check_same_q(x, y);
        return Scalar(x.q_, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        check_same_q(x, y);
        return Scalar(x.q_, x.a_ - y.a_, x.b_ - y.b_);
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        check_same_q(x, y);
        return Scalar(x.q_, x.a_ * y.a_ + x.b_ * y.b_ * GaussRational(x.q_),
                      x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        check_same_q(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Total order on the coefficient tuple (a.re, a.im, b.re, b.im); used only
    // to fix canonical orderings in printed output.
    static int cmp(const Scalar& x, const Scalar& y);

    std::complex<double> to_complex() const;

private:
    Scalar(long q, GaussRational a, GaussRational b)
        : q_(q), a_(std::move(a)), b_(std::move(b)) {}

    static void check_same_q(const Scalar& x, const Scalar& y);

    long q_;
    GaussRational a_, b_;
};

} // namespace asai

#endif
