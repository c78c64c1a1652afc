#ifndef ASAI_WHITTAKER_HPP
#define ASAI_WHITTAKER_HPP

#include <optional>
#include <vector>

#include "asai/repdata.hpp"
#include "asai/schur.hpp"

namespace asai {

// Values of the normalized spherical Whittaker function on the torus lattice
// a(pi_F^lam), lam an integer tuple of length n. Zero off the dominant cone;
// on it, a half-power of the torus modulus times Schur values of the Satake
// parameters, with the shape doubled in the ramified case and a product of
// two Schur values in the split case. A common last entry factors out through
// the central character, which extends the dominant formula to tuples with
// negative parts.
class WhittakerEvaluator {
public:
    WhittakerEvaluator(LocalDatum datum, UnramifiedRep rep);

    const LocalDatum& datum() const { return datum_; }
    const UnramifiedRep& rep() const { return rep_; }

    Scalar value(const std::vector<long>& lam) const;

private:
    Scalar dominant_value(const std::vector<long>& lam) const;

    LocalDatum datum_;
    UnramifiedRep rep_;
    SchurEvaluator sch_;
    std::optional<SchurEvaluator> sch2_;
};

Scalar whittaker_value(const LocalDatum& datum, const UnramifiedRep& rep,
                       const std::vector<long>& lam);

// Whittaker value of the contragredient at the same lattice point.
Scalar dual_whittaker_value(const LocalDatum& datum, const UnramifiedRep& rep,
                            const std::vector<long>& lam);

} // namespace asai

#endif
