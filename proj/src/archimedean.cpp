#include "asai/archimedean.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace asai {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;

std::string cplx_str(Cplx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

} // namespace

Cplx complex_gamma(Cplx z) {
    static const double g[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * complex_gamma(Cplx(1.0, 0.0) - z));
    z -= 1.0;
    Cplx x = g[0];
    for (int k = 1; k < 9; ++k) x += g[k] / (z + Cplx(k, 0));
    Cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Cplx gamma_r(Cplx s) { return std::pow(kPi, -s / 2.0) * complex_gamma(s / 2.0); }

Cplx gamma_c(Cplx s) { return 2.0 * std::pow(2.0 * kPi, -s) * complex_gamma(s); }

namespace {

// Distance from z to the pole set {0, -step, -2 step, ...}.
double pole_distance(Cplx z, double step) {
    double idx = std::round(-z.real() / step);
    if (idx < 0) idx = 0;
    return std::abs(z - Cplx(-idx * step, 0.0));
}

} // namespace

Cplx gamma_factor_eval(const GammaFactor& g, Cplx s) {
    Cplx v(1.0, 0.0);
    for (const auto& [kind, shift] : g.terms) {
        Cplx z = s + shift;
        double step = kind == GammaKind::R ? 2.0 : 1.0;
        if (pole_distance(z, step) < 1e-8)
            throw ArithError("gamma factor evaluated within 1e-8 of a pole at s = " +
                             cplx_str(s));
        v *= kind == GammaKind::R ? gamma_r(z) : gamma_c(z);
    }
    return v;
}

ArchCharacter make_arch_character(ArchField field, long k, Cplx s0) {
    if (field == ArchField::R && k != 0 && k != 1)
        throw std::invalid_argument("sign exponent over R must be 0 or 1");
    return ArchCharacter{field, k, s0};
}

GammaFactor arch_asai_l_n1(const ArchCharacter& chi) {
    if (chi.field != ArchField::C)
        throw std::invalid_argument("this factor takes a character of the quadratic "
                                    "extension, which is complex here");
    long a = ((chi.k % 2) + 2) % 2;
    return GammaFactor{{{GammaKind::R, 2.0 * chi.s0 + Cplx(a, 0)}}};
}

namespace {

// 2 * integral_0^inf exp(-pi x^2) x^{w + kappa - 1} dx, computed as a series
// head on [0, 1/2] plus adaptive quadrature on [1/2, 8]. The tail beyond 8 is
// below 1e-85 and ignored.
Cplx half_line_integral(Cplx w, long kappa) {
    const double delta = 0.5;
    Cplx head(0.0, 0.0);
    double fact = 1.0; // (-pi)^j / j!
    for (int j = 0; j < 48; ++j) {
        Cplx expo = w + Cplx(2 * j + kappa, 0);
        head += fact * std::pow(delta, expo) / expo;
        fact *= -kPi / (j + 1);
    }
    auto f = [&](double x) {
        return std::exp(-kPi * x * x) * std::pow(x, w + Cplx(kappa - 1, 0));
    };
    Cplx tail = Quad::integrate(f, delta, 8.0, 12, 1e-12);
    return 2.0 * (head + tail);
}

} // namespace

Cplx tate_zeta(const ArchCharacter& chi, TestFn f, Cplx s) {
    if (chi.field != ArchField::R)
        throw std::invalid_argument("the zeta integral here is over the base field R");
    long kappa = f == TestFn::x_gaussian ? 1 : 0;
    if ((chi.k + kappa) % 2 != 0) return Cplx(0.0, 0.0); // parity mismatch
    Cplx w = s + chi.s0;
    if (w.real() + kappa <= 0)
        throw ArithError("zeta integral diverges: need Re(s + s0) + " +
                         std::to_string(kappa) + " > 0, got Re = " +
                         std::to_string(w.real() + kappa));
    return half_line_integral(w, kappa);
}

Cplx tate_gamma(const ArchCharacter& chi, Cplx s) {
    if (chi.field != ArchField::R)
        throw std::invalid_argument("the zeta integral here is over the base field R");
    Cplx a(static_cast<double>(chi.k), 0.0);
    Cplx eps = chi.k == 0 ? Cplx(1.0, 0.0) : Cplx(0.0, 1.0);
    GammaFactor num{{{GammaKind::R, -chi.s0 + a}}};   // at 1 - s
    GammaFactor den{{{GammaKind::R, chi.s0 + a}}};    // at s
    return eps * gamma_factor_eval(num, Cplx(1.0, 0.0) - s) / gamma_factor_eval(den, s);
}

double tate_fe_residual(const ArchCharacter& chi, TestFn f, Cplx s) {
    ArchCharacter inv = make_arch_character(ArchField::R, chi.k, -chi.s0);
    Cplx hat_mult = f == TestFn::x_gaussian ? Cplx(0.0, 1.0) : Cplx(1.0, 0.0);
    Cplx lhs = hat_mult * tate_zeta(inv, f, Cplx(1.0, 0.0) - s);
    Cplx rhs = tate_gamma(chi, s) * tate_zeta(chi, f, s);
    return std::abs(lhs - rhs);
}

Cplx contour_reconstruct(const std::function<Cplx(Cplx)>& fplus,
                         const std::function<Cplx(Cplx)>& fminus, double D, Cplx s,
                         double x_max) {
    if (D <= 0) throw std::invalid_argument("contour abscissa must be positive");
    if (D - std::abs(s.real()) < 1e-8)
        throw ArithError("evaluation point too close to the contour: |Re s| = " +
                         std::to_string(std::abs(s.real())) + " vs D = " +
                         std::to_string(D));
    auto right = [&](double x) { return fplus(Cplx(D, x)) / (Cplx(D, x) - s); };
    auto left = [&](double x) { return fminus(Cplx(D, x)) / (Cplx(D, x) + s); };
    Cplx total = Quad::integrate(right, -x_max, x_max, 12, 1e-12) +
                 Quad::integrate(left, -x_max, x_max, 12, 1e-12);
    return total / (2.0 * kPi);
}

} // namespace asai
