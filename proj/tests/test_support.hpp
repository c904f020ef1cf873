#pragma once

#include <cmath>
#include <complex>
#include <functional>

// Test-side oracles, independent of the library evaluation paths.

namespace oracle {

using cplx = std::complex<double>;

// Radial spherical ODE  f'' + (n-1) coth(t) f' = lambda f,  f(0) = 1,
// f'(0) = 0, integrated by fixed-step RK4 from a series start near 0.
// Entirely independent of the K-integral quadrature it cross-checks.
inline cplx spherical_ode(cplx lambda, int n, double t_target,
                          double h = 2e-5) {
    const double t0 = 1e-3;
    // f = 1 + c2 t^2 + c4 t^4 + O(t^6) with c2 = lambda/(2n),
    // c4 = c2 (lambda - 2(n-1)/3) / (4(n+2)).
    const cplx c2 = lambda / (2.0 * n);
    const cplx c4 = c2 * (lambda - 2.0 * (n - 1.0) / 3.0) / (4.0 * (n + 2.0));
    cplx f = 1.0 + c2 * t0 * t0 + c4 * t0 * t0 * t0 * t0;
    cplx fp = 2.0 * c2 * t0 + 4.0 * c4 * t0 * t0 * t0;

    auto rhs = [&](double t, cplx y, cplx yp) {
        return lambda * y - (n - 1.0) * (std::cosh(t) / std::sinh(t)) * yp;
    };
    double t = t0;
    while (t < t_target - 1e-12) {
        const double step = std::min(h, t_target - t);
        const cplx k1y = fp, k1p = rhs(t, f, fp);
        const cplx k2y = fp + 0.5 * step * k1p,
                   k2p = rhs(t + 0.5 * step, f + 0.5 * step * k1y,
                             fp + 0.5 * step * k1p);
        const cplx k3y = fp + 0.5 * step * k2p,
                   k3p = rhs(t + 0.5 * step, f + 0.5 * step * k2y,
                             fp + 0.5 * step * k2p);
        const cplx k4y = fp + step * k3p,
                   k4p = rhs(t + step, f + step * k3y, fp + step * k3p);
        f += step / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        fp += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        t += step;
    }
    return f;
}

// Composite Simpson on [a, b]; test-side workhorse for pairings.
template <typename F>
auto simpson(F&& f, double a, double b, int intervals) -> decltype(f(0.0)) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / intervals;
    auto acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

} // namespace oracle
