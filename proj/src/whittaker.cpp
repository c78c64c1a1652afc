#include "asai/whittaker.hpp"

#include <stdexcept>
#include <string>

namespace asai {

WhittakerEvaluator::WhittakerEvaluator(LocalDatum datum, UnramifiedRep rep)
    : datum_(datum), rep_(std::move(rep)), sch_(rep_.satake) {
    if (datum_.ext == ExtType::split) sch2_.emplace(rep_.satake2);
}

Scalar WhittakerEvaluator::value(const std::vector<long>& lam) const {
    if (static_cast<long>(lam.size()) != rep_.n)
        throw std::invalid_argument("lattice tuple has length " + std::to_string(lam.size()) +
                                    ", expected " + std::to_string(rep_.n));
    for (size_t k = 1; k < lam.size(); ++k)
        if (lam[k] > lam[k - 1]) return Scalar::zero(datum_.q);

    long c = lam.back();
    if (c >= 0) return dominant_value(lam);

    // Split off the central part a(pi^c * 1): its modulus is 1, so only the
    // central character contributes.
    std::vector<long> mu(lam);
    for (long& p : mu) p -= c;
    Scalar omega = Scalar::one(datum_.q);
    if (datum_.ext == ExtType::split) {
        for (const Scalar& a : rep_.satake) omega = omega * a;
        for (const Scalar& a : rep_.satake2) omega = omega * a;
        omega = omega.pow(c);
    } else {
        omega = central_char_value(rep_, datum_, datum_.uniformizer_val_ext() * c);
    }
    return omega * dominant_value(mu);
}

Scalar WhittakerEvaluator::dominant_value(const std::vector<long>& lam) const {
    switch (datum_.ext) {
    case ExtType::inert_ramified:
        return delta_sqrt(datum_, BaseField::E, lam) * sch_.jacobi_trudi(doubled(lam));
    case ExtType::inert_unramified:
        return delta_sqrt(datum_, BaseField::E, lam) * sch_.jacobi_trudi(lam);
    case ExtType::split: {
        Scalar half = delta_sqrt(datum_, BaseField::F, lam);
        return (half * sch_.jacobi_trudi(lam)) * (half * sch2_->jacobi_trudi(lam));
    }
    }
    return Scalar::zero(datum_.q);
}

Scalar whittaker_value(const LocalDatum& datum, const UnramifiedRep& rep,
                       const std::vector<long>& lam) {
    return WhittakerEvaluator(datum, rep).value(lam);
}

Scalar dual_whittaker_value(const LocalDatum& datum, const UnramifiedRep& rep,
                            const std::vector<long>& lam) {
    return WhittakerEvaluator(datum, contragredient(rep)).value(lam);
}

} // namespace asai
