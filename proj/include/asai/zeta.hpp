#ifndef ASAI_ZETA_HPP
#define ASAI_ZETA_HPP

#include <optional>
#include <string>

#include "asai/factors.hpp"
#include "asai/whittaker.hpp"

namespace asai {

// Truncated lattice sum of the local zeta integral on the diagonal torus:
// the X^k coefficient collects W(a(pi^lam)) / delta(a(pi^lam)) over the
// partitions lam of k with at most n parts. The modulus division is done
// term by term; no cancellation against the Whittaker normalization is
// assumed up front.
SeriesTruncation zeta_series(const LocalDatum& datum, const UnramifiedRep& rep, long depth);

struct VerifyReport {
    std::string case_id;
    long q;
    std::optional<ExtType> ext; // empty for checks that are extension-free
    long n;
    bool pass;
    std::optional<long> mismatch_degree;
    std::optional<Scalar> lhs, rhs;
};

// Truncated zeta sum against the expansion of the closed-form L-factor.
VerifyReport verify_unramified_identity(const LocalDatum& datum, const UnramifiedRep& rep,
                                        long depth, std::string case_id);

// Exact identity of rational functions:
//   L(1-s, dual) == prefactor * gamma * L(s),
// where the prefactor is assembled independently of the epsilon factor
// (central character at the twist, half-power of q, inverse root of unity).
// Also requires that prefactor and epsilon cancel exactly, which is what
// makes the check independent of the choice of twisting datum.
VerifyReport verify_functional_equation(const LocalDatum& datum, const UnramifiedRep& rep,
                                        const TauDatum& tau, std::string case_id);

// Covariance of the lattice sum under a torus shift by nu = (m(n-1),...,m,0):
// summing W at shifted points against the modulus of the shifted argument
// must reproduce delta(a(nu)) X^{-|nu|} times the unshifted sum.
VerifyReport twist_covariance_check(const LocalDatum& datum, const UnramifiedRep& rep,
                                    long m, long depth, std::string case_id);

} // namespace asai

#endif
