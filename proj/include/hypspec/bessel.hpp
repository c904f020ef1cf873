#pragma once

#include <cmath>
#include <complex>

#include "hypspec/errors.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

// Modified Bessel K_nu(x) for complex order and x > 0 via
//   K_nu(x) = int_0^inf e^{-x cosh u} cosh(nu u) du.
// The integrand decays doubly exponentially; composite Gauss-Legendre with
// oscillation-aware panelling gives ~1e-13 relative accuracy for the
// moderate orders used by the Eisenstein Fourier expansion.
inline cplx bessel_k(cplx nu, double x) {
    if (!(x > 0.0))
        throw precondition_error("x > 0", "got " + std::to_string(x));
    const double re = std::abs(nu.real());
    // Cutoff where x cosh u - |Re nu| u exceeds the underflow budget.
    double U = 2.0;
    for (int it = 0; it < 4; ++it)
        U = std::acosh(std::max(2.0, (745.0 + re * U) / x));
    const int panels =
        std::max(8, static_cast<int>(std::ceil(U * (std::abs(nu.imag()) + 2.0) / 3.0)));
    auto f = [&](double u) -> cplx {
        return std::exp(-x * std::cosh(u)) * std::cosh(nu * u);
    };
    return integrate_gl(f, 0.0, U, panels, 16);
}

} // namespace hypspec
