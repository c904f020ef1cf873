#pragma once

#include <cmath>
#include <complex>

#include "hypspec/errors.hpp"
#include "hypspec/gammafn.hpp"

namespace hypspec {

namespace detail {

// Euler-Maclaurin tail coefficients B_{2j} / (2j)!.
inline constexpr double bern_over_fact[] = {
    8.3333333333333333e-02,   // B2/2!
    -1.3888888888888889e-03,  // B4/4!
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
};

// Euler-Maclaurin for Re s >= 1/2 (and moderate |Im s|).
inline cplx zeta_em(cplx s) {
    const int M = std::max(12, static_cast<int>(1.4 * std::abs(s.imag())) + 8);
    cplx sum = 0.0;
    for (int k = 1; k < M; ++k) sum += std::pow(cplx(k, 0.0), -s);
    const cplx Mc(M, 0.0);
    sum += std::pow(Mc, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Mc, -s);
    cplx poch = s;                 // s (s+1) ... (s + 2j - 2), rising
    cplx Mp = std::pow(Mc, -s - 1.0);
    for (int j = 0; j < 10; ++j) {
        sum += bern_over_fact[j] * poch * Mp;
        poch *= (s + (2.0 * j + 1.0)) * (s + (2.0 * j + 2.0));
        Mp /= (Mc * Mc);
    }
    return sum;
}

} // namespace detail

// Riemann zeta for complex s (reflection into Re s >= 1/2), accurate to
// ~1e-13 relative for |Im s| <= 60.  s = 1 is the pole.
inline cplx zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw pole_error("zeta pole at s = 1", s);
    if (s.real() >= 0.5) return detail::zeta_em(s);
    // The reflection formula pairs the zero of sin(pi s/2) with the pole of
    // zeta(1-s) at s = 0; use the Taylor expansion there.
    if (std::abs(s) < 1e-6)
        return cplx(-0.5, 0.0) - 0.5 * std::log(2.0 * M_PI) * s;
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const cplx one_minus = 1.0 - s;
    return std::pow(cplx(2.0, 0.0), s) * std::pow(cplx(M_PI, 0.0), s - 1.0) *
           std::sin(0.5 * M_PI * s) * gamma_fn(one_minus) *
           detail::zeta_em(one_minus);
}

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s); satisfies
// xi(s) = xi(1-s) with simple poles at s = 0, 1.
inline cplx zeta_completed(cplx s) {
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0))
        throw pole_error("completed zeta pole", s);
    return std::pow(cplx(M_PI, 0.0), -0.5 * s) * gamma_fn(0.5 * s) * zeta(s);
}

// Scattering constant of the level-one Eisenstein series:
//   c_s = xi(2s-1) / xi(2s) = sqrt(pi) Gamma(s-1/2) zeta(2s-1) / (Gamma(s) zeta(2s)).
// The s = 1/2 limit is -1 (ratio of the two xi poles).
inline cplx scattering_c(cplx s) {
    const cplx u = 2.0 * s - 1.0;
    if (std::abs(u) < 1e-12) return -1.0;
    if (std::abs(s - 1.0) < 1e-12)
        throw pole_error("scattering constant pole at s = 1", s);
    return zeta_completed(u) / zeta_completed(u + 1.0);
}

} // namespace hypspec
