#pragma once

#include <functional>
#include <utility>

#include "cvnn/complex.hpp"
#include "cvnn/errors.hpp"

namespace cvnn {

// A function value together with the four real partials of u+iv and the
// derived d/dz, d/dz* pair. dz and dzbar are always recomputable from the
// partials:
//   dz    = ((ux + vy) + i (vx - uy)) / 2
//   dzbar = ((ux - vy) + i (vx + uy)) / 2
struct WirtingerJet {
    Complex value{};
    double ux = 0, uy = 0, vx = 0, vy = 0;
    Complex dz{};
    Complex dzbar{};
};

inline WirtingerJet make_jet(Complex value, double ux, double uy, double vx,
                             double vy) {
    WirtingerJet j;
    j.value = value;
    j.ux = ux;
    j.uy = uy;
    j.vx = vx;
    j.vy = vy;
    j.dz = {0.5 * (ux + vy), 0.5 * (vx - uy)};
    j.dzbar = {0.5 * (ux - vy), 0.5 * (vx + uy)};
    return j;
}

inline constexpr double kDefaultFdStep = 1e-5;

// Central finite differences on x and y; the repo-wide derivative oracle.
// Every analytic derivative in the catalog is validated against this.
inline WirtingerJet wirtinger_fd(const std::function<Complex(Complex)>& f,
                                 Complex z, double h = kDefaultFdStep) {
    const Complex fxp = f({z.re + h, z.im});
    const Complex fxm = f({z.re - h, z.im});
    const Complex fyp = f({z.re, z.im + h});
    const Complex fym = f({z.re, z.im - h});
    auto check = [&](Complex v, Complex at) {
        if (!is_finite(v)) {
            throw OracleError("finite-difference oracle failure: f is non-finite at stencil point " +
                              to_string(at));
        }
    };
    check(fxp, {z.re + h, z.im});
    check(fxm, {z.re - h, z.im});
    check(fyp, {z.re, z.im + h});
    check(fym, {z.re, z.im - h});
    const double inv2h = 1.0 / (2.0 * h);
    return make_jet(f(z), (fxp.re - fxm.re) * inv2h, (fyp.re - fym.re) * inv2h,
                    (fxp.im - fxm.im) * inv2h, (fyp.im - fym.im) * inv2h);
}

// Cauchy-Riemann residuals (|ux - vy|, |uy + vx|); both vanish iff the jet
// satisfies the CR equations at its point, equivalently |dzbar| is small.
inline std::pair<double, double> cr_residual(const WirtingerJet& jet) {
    return {std::fabs(jet.ux - jet.vy), std::fabs(jet.uy + jet.vx)};
}

}  // namespace cvnn
