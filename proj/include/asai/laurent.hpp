#ifndef ASAI_LAURENT_HPP
#define ASAI_LAURENT_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "asai/scalar.hpp"

namespace asai {

// Default truncation depth for power-series comparisons.
inline constexpr long kDefaultSeriesDepth = 12;

// Laurent polynomial in one formal variable X with Scalar coefficients.
// Invariant: no zero coefficients are stored. The base q is carried so that
// empty polynomials still know their coefficient field.
class LaurentPoly {
public:
    explicit LaurentPoly(long q) : q_(q) {}

    static LaurentPoly zero(long q) { return LaurentPoly(q); }
    static LaurentPoly one(long q);
    static LaurentPoly term(const Scalar& c, long e);

    long q() const { return q_; }
    bool is_zero() const { return coeffs_.empty(); }
    long term_count() const { return static_cast<long>(coeffs_.size()); }

    // Lowest/highest stored exponent; calling either on zero is a caller bug.
    long low_exp() const;
    long high_exp() const;

    Scalar coeff(long e) const;
    void add_term(long e, const Scalar& c); // accumulates, erasing cancellations
    const std::map<long, Scalar>& terms() const { return coeffs_; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& f);
    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);
    friend bool operator!=(const LaurentPoly& f, const LaurentPoly& g) { return !(f == g); }

    // Multiply by c*X^e.
    LaurentPoly scaled_shift(const Scalar& c, long e) const;

private:
    long q_;
    std::map<long, Scalar> coeffs_;
};

// c * X^e with c != 0.
struct Monomial {
    Scalar c;
    long e;

    Monomial(Scalar coeff, long exp);
    static Monomial one(long q) { return Monomial(Scalar::one(q), 0); }

    Monomial inv() const { return Monomial(c.inv(), -e); }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(a.c * b.c, a.e + b.e);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e == b.e && a.c == b.c;
    }
    LaurentPoly poly() const { return LaurentPoly::term(c, e); }
};

// Quotient of Laurent polynomials, kept normalized: den has lowest exponent 0
// and constant coefficient 1. No gcd reduction; equality is cross-multiplied.
class RatFunc {
public:
    RatFunc(LaurentPoly num, LaurentPoly den); // normalizes, rejects zero den

    static RatFunc from_poly(LaurentPoly p);
    static RatFunc from_monomial(const Monomial& m);
    static RatFunc one(long q) { return from_poly(LaurentPoly::one(q)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    long q() const { return num_.q(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc inv() const; // rejects zero numerator
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);

    // If num == m * den for a monomial m, return it.
    std::optional<Monomial> as_monomial() const;

private:
    LaurentPoly num_, den_;
};

// Structural equality num_f * den_g == num_g * den_f.
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

// prod over factors (1 - alpha X^m)^{-1}. Factors with alpha = 0 are dropped;
// the list is kept sorted by (m, coefficient order) so equal products compare
// and print identically.
class EulerProduct {
public:
    explicit EulerProduct(long q) : q_(q) {}
    EulerProduct(long q, std::vector<std::pair<Scalar, long>> factors);

    long q() const { return q_; }
    const std::vector<std::pair<Scalar, long>>& factors() const { return factors_; }
    void push(const Scalar& alpha, long m); // keeps the canonical order

    friend bool operator==(const EulerProduct& a, const EulerProduct& b);
    friend bool operator!=(const EulerProduct& a, const EulerProduct& b) { return !(a == b); }

    RatFunc to_ratfunc() const;

private:
    long q_;
    std::vector<std::pair<Scalar, long>> factors_;
};

// Coefficients of X^0..X^N.
struct SeriesTruncation {
    long q;
    std::vector<Scalar> c;

    long depth() const { return static_cast<long>(c.size()) - 1; }
    friend bool operator==(const SeriesTruncation& a, const SeriesTruncation& b);
    friend bool operator!=(const SeriesTruncation& a, const SeriesTruncation& b) {
        return !(a == b);
    }
};

// Power-series expansion to depth N. The numerator must have no negative
// exponents once normalized; otherwise the value is not a power series.
SeriesTruncation series_expand(const RatFunc& f, long depth);
SeriesTruncation series_expand(const EulerProduct& p, long depth);

// The substitution s -> 1-s, i.e. X -> q^{-1} X^{-1}. Exact and involutive.
LaurentPoly subst_one_minus_s(const LaurentPoly& p);
Monomial subst_one_minus_s(const Monomial& m);
RatFunc subst_one_minus_s(const RatFunc& f);

// First index where two truncations disagree (depths must match), or first
// exponent where two Laurent polynomials disagree.
std::optional<long> first_mismatch(const SeriesTruncation& a, const SeriesTruncation& b);
std::optional<long> first_mismatch(const LaurentPoly& a, const LaurentPoly& b);

} // namespace asai

#endif
