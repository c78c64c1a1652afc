#ifndef ASAI_ARCHIMEDEAN_HPP
#define ASAI_ARCHIMEDEAN_HPP

#include <complex>
#include <functional>
#include <vector>

#include "asai/errors.hpp"

namespace asai {

using Cplx = std::complex<double>;

// Gamma function on C via a Lanczos approximation (g = 7, 9 coefficients)
// with the reflection formula on Re(z) < 1/2. Relative accuracy is well
// inside 1e-12 on the region exercised here.
Cplx complex_gamma(Cplx z);

// Normalized archimedean factors: pi^{-s/2} Gamma(s/2), poles at 0, -2, -4..;
// 2 (2 pi)^{-s} Gamma(s), poles at 0, -1, -2...
Cplx gamma_r(Cplx s);
Cplx gamma_c(Cplx s);

enum class GammaKind { R, C };

// Product of shifted normalized gamma factors: prod_k Gamma_{kind_k}(s + mu_k).
struct GammaFactor {
    std::vector<std::pair<GammaKind, Cplx>> terms;
};

// Evaluation; refuses points within 1e-8 of any pole of any term.
Cplx gamma_factor_eval(const GammaFactor& g, Cplx s);

enum class ArchField { R, C };

// Character of the unit group of an archimedean field:
//   over R: sgn(x)^k |x|^{s0} with k in {0, 1};
//   over C: (z/|z|)^k |z z-bar|^{s0} with any integer winding k.
struct ArchCharacter {
    ArchField field;
    long k;
    Cplx s0;
};

ArchCharacter make_arch_character(ArchField field, long k, Cplx s0);

// The n = 1 factor over C restricted to the base: a single
// Gamma_R(s + 2 s0 + (k mod 2)).
GammaFactor arch_asai_l_n1(const ArchCharacter& chi);

enum class TestFn { gaussian, x_gaussian };

// The local zeta integral over R^x of f against chi |.|^s, computed by
// quadrature: a power-series head on [0, 1/2] around the endpoint singularity
// and adaptive Gauss-Kronrod on [1/2, 8]. Exactly zero when the parities of
// chi and f disagree; requires Re(s + s0) + deg(f) > 0 to converge.
Cplx tate_zeta(const ArchCharacter& chi, TestFn f, Cplx s);

// epsilon(chi) L(1-s, chi^{-1}) / L(s, chi) with L(s, sgn^a |.|^{s0}) =
// Gamma_R(s + s0 + a) and epsilon(sgn^a) = i^a for the additive character
// x -> exp(2 pi i x).
Cplx tate_gamma(const ArchCharacter& chi, Cplx s);

// | Z(1-s, chi^{-1}, f-hat) - gamma(s, chi) Z(s, chi, f) |, with the Fourier
// transform of the test function taken for x -> exp(2 pi i x): the gaussian
// is self-dual and x gaussian picks up a factor i.
double tate_fe_residual(const ArchCharacter& chi, TestFn f, Cplx s);

// Reconstruction of a function holomorphic and decaying on the strip
// |Re z| <= D from its boundary values:
//   (1/2pi) [ int fplus(D+ix)/(D+ix-s) dx + int fminus(D+ix)/(D+ix+s) dx ]
// with fminus(z) = fplus(-z), both integrals truncated to |x| <= x_max.
// The evaluation point must satisfy |Re s| < D.
Cplx contour_reconstruct(const std::function<Cplx(Cplx)>& fplus,
                         const std::function<Cplx(Cplx)>& fminus, double D, Cplx s,
                         double x_max = 8.0);

} // namespace asai

#endif
