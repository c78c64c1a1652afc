#ifndef ASAI_REPDATA_HPP
#define ASAI_REPDATA_HPP

#include <string>
#include <vector>

#include "asai/scalar.hpp"

namespace asai {

// How the quadratic etale algebra E sits over the base field F.
enum class ExtType { split, inert_unramified, inert_ramified };

const char* ext_name(ExtType ext);

struct LocalDatum {
    long q;      // residue cardinality of F, a prime power >= 2
    ExtType ext;

    // Residue cardinality of E: q^2 in the inert unramified case, q otherwise.
    long residue_card_ext() const {
        return ext == ExtType::inert_unramified ? q * q : q;
    }
    // Valuation in E of a uniformizer of F: 2 when ramified, 1 otherwise.
    long uniformizer_val_ext() const { return ext == ExtType::inert_ramified ? 2 : 1; }
};

LocalDatum make_local_datum(long q, ExtType ext);

// Unramified representation given by its Satake parameters. In the split case
// the representation is a pair, with a second parameter tuple of equal size;
// otherwise satake2 stays empty.
struct UnramifiedRep {
    long n;
    std::vector<Scalar> satake;
    std::vector<Scalar> satake2;
};

UnramifiedRep make_unramified_rep(const LocalDatum& datum, std::vector<Scalar> satake,
                                  std::vector<Scalar> satake2 = {});

UnramifiedRep contragredient(const UnramifiedRep& rep);

// Twisting datum: d is the valuation in E of the twisting element, lam a
// fourth root of unity in Q(i). Both are ignored in the split case.
struct TauDatum {
    long d;
    GaussRational lam;
};

TauDatum make_tau(long d, const GaussRational& lam);

// Central character at a power of the uniformizer of E: prod satake_i^v.
// Only meaningful in the inert cases; the split central character lives on a
// product and is assembled by the callers that need it.
Scalar central_char_value(const UnramifiedRep& rep, const LocalDatum& datum, long v);

enum class BaseField { F, E };

// Modulus character of the diagonal torus at a(pi^lam) for an integer tuple
// lam of length n: q_F^{-sum (n+1-2i) lam_i} over F and its square over E
// (the square is uniform across all three extension types). delta_sqrt gives
// the positive square root, rational except over F at odd exponent sums.
Scalar delta_value(const LocalDatum& datum, BaseField field, const std::vector<long>& lam);
Scalar delta_sqrt(const LocalDatum& datum, BaseField field, const std::vector<long>& lam);

} // namespace asai

#endif
