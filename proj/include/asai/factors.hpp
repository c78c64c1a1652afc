#ifndef ASAI_FACTORS_HPP
#define ASAI_FACTORS_HPP

#include <complex>
#include <vector>

#include "asai/laurent.hpp"
#include "asai/repdata.hpp"

namespace asai {

// The twisted tensor L-factor of an unramified representation, as an inverse
// product in X = q_F^{-s}:
//   split:            prod_{i,j} (1 - t_i u_j X)^{-1}
//   inert unramified: prod_i (1 - t_i X)^{-1} prod_{i<j} (1 - t_i t_j X^2)^{-1}
//   inert ramified:   prod_i (1 - t_i^2 X)^{-1} prod_{i<j} (1 - t_i t_j X)^{-1}
EulerProduct asai_l(const LocalDatum& datum, const UnramifiedRep& rep);

// The matching epsilon factor: a monomial in X. Trivial in the split case;
// in the inert cases, with K = n(n-1)/2, f the residue degree of E over F and
// d the valuation of the twisting element,
//   lam^K * q^{-f d K / 2} * X^{-f d K} * (prod_i t_i)^{-d(n-1)}.
Monomial asai_epsilon(const LocalDatum& datum, const UnramifiedRep& rep, const TauDatum& tau);

// gamma = epsilon * L(1-s, dual) / L(s), assembled exactly.
RatFunc asai_gamma(const LocalDatum& datum, const UnramifiedRep& rep, const TauDatum& tau);

// Change of additive character by a scaling of valuation `val`:
// eps * omega_at_scale^n * q^{val n^2 / 2} X^{val n^2} * eta_sign^{n(n-1)/2},
// where omega_at_scale is the central character value at the scaling element
// and eta_sign in {+1,-1} is the quadratic character attached to E over F.
Monomial epsilon_scaling(const Monomial& eps, long n, const Scalar& omega_at_scale,
                         long val, int eta_sign);

// Pole positions in s: each factor (1 - alpha X^m)^{-1} contributes the
// principal value log(alpha) / (m log q), one entry per factor in canonical
// order.
std::vector<std::complex<double>> pole_locations(const EulerProduct& l, long q);

// Same factor shapes with floating-point parameters, for data that does not
// live in the exact field (e.g. unit-modulus tuples).
std::vector<std::pair<std::complex<double>, long>> asai_l_shape(
    ExtType ext, const std::vector<std::complex<double>>& t,
    const std::vector<std::complex<double>>& u);
std::vector<std::complex<double>> pole_locations(
    const std::vector<std::pair<std::complex<double>, long>>& factors, double q);

} // namespace asai

#endif
