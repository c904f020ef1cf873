#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "hypspec/errors.hpp"
#include "hypspec/gammafn.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

// Spectral coordinate of everything in this library: complex s together
// with the dimension n of X = H^n.  The Laplace eigenvalue of the
// associated spherical function is lambda_s = (n-1)^2 s (s-1).
struct SpectralParameter {
    cplx s;
    int n;

    SpectralParameter(cplx s, int n) : s(s), n(n) {
        if (n < 2)
            throw precondition_error("n >= 2", "got " + std::to_string(n));
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw precondition_error("s finite", "got non-finite s");
    }

    static SpectralParameter critical_line(double tau, int n) {
        return SpectralParameter(cplx(0.5, tau), n);
    }

    cplx lambda() const {
        const double m = n - 1.0;
        return m * m * s * (s - 1.0);
    }
};

inline cplx lambda_of_s(const SpectralParameter& p) { return p.lambda(); }

namespace detail {

// Is z within tol of a nonpositive integer?  Writes the integer to k.
inline bool near_nonpositive_integer(cplx z, long& k, double tol) {
    double r = std::round(z.real());
    if (r > 0.0) return false;
    if (std::abs(z - cplx(r, 0.0)) > tol) return false;
    k = static_cast<long>(-r);
    return true;
}

inline double factorial(long k) {
    double f = 1.0;
    for (long j = 2; j <= k; ++j) f *= j;
    return f;
}

} // namespace detail

// Rank-one Gindikin-Karpelevic quotient
//   c(s) = Gamma((s-1/2)(n-1)/2) Gamma(3(n-1)/4)
//        / (Gamma((s+1/2)(n-1)/2) Gamma((n-1)/4)).
// Poles of the quotient raise pole_error carrying the offending Gamma
// argument; simultaneous numerator/denominator poles cancel to the finite
// limit (e.g. n = 3, s = -1/2 gives -1/2, matching 1/(2s-1)).
inline cplx c_function(const SpectralParameter& p) {
    const double m = 0.5 * (p.n - 1);
    const cplx z1 = (p.s - 0.5) * m;  // numerator argument
    const cplx z2 = (p.s + 0.5) * m;  // denominator argument
    const double tol1 = 1e-13 * std::max(1.0, std::abs(z1));
    const double tol2 = 1e-13 * std::max(1.0, std::abs(z2));

    const double const_factor =
        std::exp(std::lgamma(3.0 * m / 2.0) - std::lgamma(m / 2.0));

    long k1 = 0, k2 = 0;
    const bool pole1 = detail::near_nonpositive_integer(z1, k1, tol1);
    const bool pole2 = detail::near_nonpositive_integer(z2, k2, tol2);
    if (pole1 && pole2) {
        // Gamma(z1)/Gamma(z2) -> (-1)^{k1-k2} k2!/k1! since the two
        // arguments approach their poles at the same linear rate in s.
        double ratio = detail::factorial(k2) / detail::factorial(k1);
        if ((k1 - k2) % 2 != 0) ratio = -ratio;
        return ratio * const_factor;
    }
    if (pole1)
        throw pole_error("c_function pole: numerator Gamma argument "
                         "at a nonpositive integer", z1);
    if (pole2) return 0.0;  // denominator Gamma pole kills the quotient

    return std::exp(log_gamma_ratio(z1, z2)) * const_factor;
}

inline cplx c_function(cplx s, int n) { return c_function(SpectralParameter(s, n)); }

// Plancherel density 1/|c(s)|^2 on the critical line, parametrized by
// tau = Im s.  tau = 0 sits on the pole of c and is signaled.
inline double plancherel_density(const SpectralParameter& p) {
    if (p.s.real() != 0.5)
        throw precondition_error("Re s = 1/2",
                                 "got Re s = " + std::to_string(p.s.real()));
    if (p.s.imag() == 0.0)
        throw pole_error("plancherel_density at tau = 0 (pole of c)", p.s);
    const cplx c = c_function(p);
    const double a = std::abs(c);
    return 1.0 / (a * a);
}

inline double plancherel_density(double tau, int n) {
    return plancherel_density(SpectralParameter::critical_line(tau, n));
}

// Spectral measure density used by the transform/Sobolev machinery: the
// Plancherel density evaluated with the spectral argument doubled,
//   m_n(tau) = 1/|c(1/2 + 2 i tau)|^2,
// which is the density matching psi_{1/2+i tau} under the geometric
// normalization lambda_s = (n-1)^2 s(s-1) fixed by this library (for n = 3
// the two densities agree up to the calibrated constant).  The tau = 0
// limit is 0.
inline double spectral_measure(double tau, int n) {
    if (tau == 0.0) return 0.0;
    const cplx c = c_function(SpectralParameter(cplx(0.5, 2.0 * tau), n));
    const double a = std::abs(c);
    return 1.0 / (a * a);
}

// Least-squares slope of log|c(1/2 + i tau)| against log tau over the grid.
// For a valid grid (>= 8 points spanning at least two decades) the slope
// approaches -(n-1)/2.
inline double asymptotic_exponent_fit(int n, const std::vector<double>& tau_grid) {
    if (tau_grid.size() < 8)
        throw precondition_error("grid must have >= 8 points",
                                 "got " + std::to_string(tau_grid.size()));
    double lo = INFINITY, hi = 0.0;
    for (double t : tau_grid) {
        if (!(t > 0))
            throw precondition_error("grid taus must be positive",
                                     "got " + std::to_string(t));
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (hi / lo < 100.0)
        throw precondition_error("grid must span at least two decades",
                                 "span ratio " + std::to_string(hi / lo));
    std::vector<double> x, y;
    x.reserve(tau_grid.size());
    y.reserve(tau_grid.size());
    for (double t : tau_grid) {
        x.push_back(std::log(t));
        y.push_back(std::log(std::abs(c_function(SpectralParameter::critical_line(t, n)))));
    }
    return fit_slope(x, y);
}

} // namespace hypspec
