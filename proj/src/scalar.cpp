#include "asai/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace asai {

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true; // q itself prime
    while (q % p == 0) q /= p;
    return q == 1;
}

long perfect_square_root(long q) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(q)));
    while (r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r * r == q ? r : 0;
}

void Scalar::check_same_q(const Scalar& x, const Scalar& y) {
    if (x.q_ != y.q_)
        throw std::invalid_argument("scalar base mismatch: q=" + std::to_string(x.q_) +
                                    " vs q=" + std::to_string(y.q_));
}

Scalar Scalar::make(long q, const GaussRational& a, const GaussRational& b) {
    long r = perfect_square_root(q);
    if (r != 0 && !b.is_zero())
        return Scalar(q, a + b * GaussRational(r), GaussRational(0));
    return Scalar(q, a, b);
}

Scalar Scalar::q_half_pow(long q, long k) {
    long h = k >= 0 ? k / 2 : -((-k + 1) / 2); // floor(k/2)
    long r = k - 2 * h;                        // 0 or 1
    Rat base = rat_qpow(q, h);
    if (r == 0) return from_rat(q, base);
    return make(q, GaussRational(0), GaussRational(base, Rat(0)));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ArithError("division by zero in Q(i)(sqrt q)");
    if (b_.is_zero()) return Scalar(q_, a_.inv(), GaussRational(0));
    // 1/(a + b sqrt q) = (a - b sqrt q) / (a^2 - q b^2); the denominator is
    // nonzero because sqrt(q) is irrational here (square q folds b to 0).
    GaussRational den = a_ * a_ - b_ * b_ * GaussRational(q_);
    GaussRational d = den.inv();
    return Scalar(q_, a_ * d, -b_ * d);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = one(q_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Scalar::cmp(const Scalar& x, const Scalar& y) {
    check_same_q(x, y);
    int c = ::cmp(x.a_.re(), y.a_.re());
    if (c != 0) return c;
    c = ::cmp(x.a_.im(), y.a_.im());
    if (c != 0) return c;
    c = ::cmp(x.b_.re(), y.b_.re());
    if (c != 0) return c;
    return ::cmp(x.b_.im(), y.b_.im());
}

std::complex<double> Scalar::to_complex() const {
    std::complex<double> v = a_.to_complex();
    if (!b_.is_zero()) v += b_.to_complex() * std::sqrt(static_cast<double>(q_));
    return v;
}

} // namespace asai
