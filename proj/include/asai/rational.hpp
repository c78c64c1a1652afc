#ifndef ASAI_RATIONAL_HPP
#define ASAI_RATIONAL_HPP

#include <complex>
#include <gmpxx.h>

#include "asai/errors.hpp"

namespace asai {

// Exact rational numbers. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are produced through arithmetic;
// values built from raw numerator/denominator pairs go through rat_make.
using Rat = mpq_class;

inline Rat rat_make(long num, long den = 1) {
    if (den == 0) throw ArithError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// q^e for integer e of either sign.
inline Rat rat_qpow(long q, long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) return Rat(1) / Rat(p);
    return Rat(p);
}

// Element of Q(i): re + im*i.
class GaussRational {
public:
    GaussRational() : re_(0), im_(0) {}
    GaussRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussRational(long v) : re_(v), im_(0) {}

    static GaussRational unit_i() { return GaussRational(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRational inv() const {
        if (is_zero()) throw ArithError("division by zero in Q(i)");
        Rat n = norm();
        return GaussRational(re_ / n, -im_ / n);
    }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_,
                             a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        return a * b.inv();
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) {
        return !(a == b);
    }

    GaussRational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        GaussRational acc(1);
        GaussRational base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

private:
    Rat re_, im_;
};

} // namespace asai

#endif
