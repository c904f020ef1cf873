#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "hypspec/bessel.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/geometry.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/zetafn.hpp"

namespace hypspec {

// Real-analytic Eisenstein series of the level-one modular group on the
// upper half plane: E(z, s) = sum over coprime (c, d) of y^s / |cz+d|^{2s}
// (half sum, i.e. over {+-1}\{coprime pairs}), meromorphically continued
// via the K-Bessel Fourier expansion.  delta-eigenvalue s(s-1); constant
// term y^s + c_s y^{1-s} with c_s = scattering_c(s).

inline constexpr double eisenstein_pole_radius = 1e-2;

inline void check_off_pole(cplx s) {
    if (std::abs(s - 1.0) < eisenstein_pole_radius)
        throw pole_error("Eisenstein series pole at s = 1", s);
    if (std::abs(s) < eisenstein_pole_radius)
        throw pole_error("Eisenstein series pole at s = 0 (mirror of s = 1)", s);
}

enum class EisensteinMethod { lattice_sum, fourier_continuation, automatic };

// Direct lattice sum; requires Re s > 1 + margin.  trunc controls the
// included disk |cz + d| <= R with R = trunc * max(1, y); the tail estimate
// must clear tail_tol or a quadrature_error is raised.
inline cplx eisenstein_lattice(cplx s, double x, double y, int trunc,
                               double tail_tol = 1e-8) {
    if (!(y > 0.0))
        throw precondition_error("y > 0", "got " + std::to_string(y));
    const double sigma = s.real();
    if (!(sigma > 1.05))
        throw precondition_error("Re s > 1 + margin for the lattice sum",
                                 "got Re s = " + std::to_string(sigma));
    const double R = trunc * std::max(1.0, y);
    // Tail: lattice points of (cx+d, cy) have density 1/y per unit area;
    // sum_{|w|>R} |w|^{-2 sigma} ~ (2 pi / y) R^{2-2 sigma} / (2 sigma - 2).
    const double tail =
        (2.0 * M_PI / y) * std::pow(R, 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0) *
        std::pow(y, sigma);
    if (!(tail <= tail_tol))
        throw quadrature_error("lattice truncation too small", tail, tail_tol);

    cplx acc = std::pow(cplx(y, 0.0), s);  // (c, d) = (0, 1) class
    const int cmax = static_cast<int>(R / y) + 1;
    for (int c = 1; c <= cmax; ++c) {
        const double cy = c * y;
        if (cy > R) break;
        const double half_width = std::sqrt(std::max(0.0, R * R - cy * cy));
        const int dlo = static_cast<int>(std::floor(-c * x - half_width));
        const int dhi = static_cast<int>(std::ceil(-c * x + half_width));
        for (int d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            const double u = c * x + d;
            const double q = u * u + cy * cy;
            // y^s / |cz+d|^{2s} = exp(s (log y - log q))
            acc += std::exp(s * (std::log(y) - std::log(q)));
        }
    }
    return acc;
}

// K-Bessel Fourier expansion, valid for all s off the poles:
//   E(z,s) = y^s + c_s y^{1-s}
//          + (4 sqrt y / xi(2s)) sum_{m>=1} m^{s-1/2} sigma_{1-2s}(m)
//                                   K_{s-1/2}(2 pi m y) cos(2 pi m x).
inline cplx eisenstein_fourier(cplx s, double x, double y, double tol = 1e-13) {
    if (!(y > 0.0))
        throw precondition_error("y > 0", "got " + std::to_string(y));
    check_off_pole(s);
    const cplx u = 2.0 * s - 1.0;
    cplx acc;
    if (std::abs(u) < 1e-12) return 0.0;  // E(z, 1/2) vanishes identically
    acc = std::pow(cplx(y, 0.0), s) +
          scattering_c(s) * std::pow(cplx(y, 0.0), 1.0 - s);

    const cplx xi2s = zeta_completed(2.0 * s);
    const cplx nu = s - 0.5;
    const cplx amp = 4.0 * std::sqrt(y) / xi2s;
    int quiet = 0;
    for (int m = 1; m <= 512; ++m) {
        // sigma_{1-2s}(m) = sum_{d | m} d^{1-2s}
        cplx sig = 0.0;
        for (int d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            sig += std::pow(cplx(d, 0.0), 1.0 - 2.0 * s);
            const int e = m / d;
            if (e != d) sig += std::pow(cplx(e, 0.0), 1.0 - 2.0 * s);
        }
        // The envelope (cos factor dropped) drives the stopping rule so a
        // node of cos(2 pi m x) cannot stop the series early.
        const cplx env = amp * std::pow(cplx(m, 0.0), nu) * sig *
                         bessel_k(nu, 2.0 * M_PI * m * y);
        acc += env * std::cos(2.0 * M_PI * m * x);
        if (std::abs(env) < tol * (1.0 + std::abs(acc)))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) break;
    }
    return acc;
}

inline cplx eisenstein_eval(cplx s, const HyperbolicPoint& z, int trunc = 200,
                            EisensteinMethod method = EisensteinMethod::automatic) {
    HyperbolicPoint p = z.to_half_space();
    const double x = p.x.empty() ? 0.0 : p.x[0];
    const double y = p.y;
    check_off_pole(s);
    switch (method) {
        case EisensteinMethod::lattice_sum:
            return eisenstein_lattice(s, x, y, trunc, 1e-6);
        case EisensteinMethod::fourier_continuation:
        case EisensteinMethod::automatic:
            // the continuation is exact everywhere off the poles; the
            // lattice sum stays available as the ground-truth cross-check
            return eisenstein_fourier(s, x, y);
    }
    throw precondition_error("method", "unknown evaluation method");
}

// Constant-term data measured from x-averages of E at several heights.
struct ConstantTermData {
    cplx s;
    cplx leading;     // coefficient of y^s (should be ~1)
    cplx c_s;         // coefficient of y^{1-s}
    double residual;  // max fit residual over the remaining heights
};

// Numerically integrates E(x + iy, s) over x in [0, 1] at each height,
// solves the 2x2 system in (y^s, y^{1-s}) from the first two heights, and
// reports the fit residual over the rest.
inline ConstantTermData constant_term(cplx s, const std::vector<double>& y_samples,
                                      EisensteinMethod method = EisensteinMethod::automatic,
                                      int trunc = 200, double lattice_tail_tol = 1e-6) {
    check_off_pole(s);
    if (y_samples.size() < 2)
        throw precondition_error("need >= 2 heights",
                                 "got " + std::to_string(y_samples.size()));
    if (std::abs(2.0 * s - 1.0) < 1e-8)
        throw precondition_error("s != 1/2 (y^s and y^{1-s} degenerate)",
                                 "got s on the degeneracy point");

    std::vector<cplx> avg(y_samples.size());
    for (size_t i = 0; i < y_samples.size(); ++i) {
        const double y = y_samples[i];
        if (!(y > 0.0))
            throw precondition_error("heights positive", "got " + std::to_string(y));
        avg[i] = integrate_gl(
            [&](double x) {
                if (method == EisensteinMethod::lattice_sum)
                    return eisenstein_lattice(s, x, y, trunc, lattice_tail_tol);
                return eisenstein_fourier(s, x, y);
            },
            0.0, 1.0, 4);
    }

    auto pw = [&](double y, cplx e) { return std::pow(cplx(y, 0.0), e); };
    const double y0 = y_samples[0], y1 = y_samples[1];
    const cplx a00 = pw(y0, s), a01 = pw(y0, 1.0 - s);
    const cplx a10 = pw(y1, s), a11 = pw(y1, 1.0 - s);
    const cplx det = a00 * a11 - a01 * a10;
    if (std::abs(det) < 1e-10 * (std::abs(a00 * a11) + std::abs(a01 * a10)))
        throw precondition_error("heights too close (ill-conditioned fit)",
                                 "determinant nearly vanishes");
    ConstantTermData out;
    out.s = s;
    out.leading = (avg[0] * a11 - avg[1] * a01) / det;
    out.c_s = (a00 * avg[1] - a10 * avg[0]) / det;
    out.residual = 0.0;
    for (size_t i = 2; i < y_samples.size(); ++i) {
        const cplx fit = out.leading * pw(y_samples[i], s) +
                         out.c_s * pw(y_samples[i], 1.0 - s);
        out.residual = std::max(out.residual, std::abs(fit - avg[i]));
    }
    return out;
}

// max over sample points of |E(z, 1-s) - c_{1-s} E(z, s)| with c_{1-s}
// measured by constant_term.
inline double functional_equation_residual(cplx s,
                                           const std::vector<HyperbolicPoint>& pts,
                                           const std::vector<double>& heights = {2.0, 3.0, 5.0}) {
    check_off_pole(s);
    check_off_pole(1.0 - s);
    const cplx c = constant_term(1.0 - s, heights).c_s;
    double worst = 0.0;
    for (const auto& z : pts) {
        const cplx lhs = eisenstein_eval(1.0 - s, z);
        const cplx rhs = c * eisenstein_eval(s, z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// Compact cycle for the period: the closed geodesic of the hyperbolic
// element [[2,1],[1,1]] (axis through (1 +- sqrt 5)/2, translation length
// 2 log((3 + sqrt 5)/2)).
struct GeodesicCycle {
    double fp_minus = 0.5 * (1.0 - std::sqrt(5.0));
    double fp_plus = 0.5 * (1.0 + std::sqrt(5.0));
    double length = 2.0 * std::log(0.5 * (3.0 + std::sqrt(5.0)));

    // Unit-speed parametrization z(u), u in [0, length].
    cplx point(double u) const {
        const cplx w(0.0, std::exp(u));
        return (fp_plus * w + fp_minus) / (w + 1.0);
    }
};

// Integral of E(., s) over one period of the closed geodesic.
inline cplx period_over_H(cplx s, int panels = 8) {
    check_off_pole(s);
    GeodesicCycle cyc;
    return integrate_gl(
        [&](double u) {
            const cplx z = cyc.point(u);
            return eisenstein_eval(s, HyperbolicPoint::half_space({z.real()}, z.imag()));
        },
        0.0, cyc.length, panels);
}

} // namespace hypspec
