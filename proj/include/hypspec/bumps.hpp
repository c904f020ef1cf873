#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hypspec/jet.hpp"
#include "hypspec/spherical.hpp"

namespace hypspec {

// Versioned test-function corpora.  Two families:
//  * pairing_bumps: compactly supported mollifiers with exact derivatives
//    (truncated-Taylor jets), used for duality pairings and the weak
//    identity of the fundamental solution;
//  * transform_bumps: rapidly decaying strip-analytic bumps whose spherical
//    transforms decay fast enough in tau for the truncated critical line.

// exp(-1/(1 - (t/R)^2)) on |t| < R, 0 outside.
struct MollifierBump {
    std::string name;
    double radius;

    double operator()(double t) const {
        const double x = t / radius;
        if (x * x >= 0.999) return 0.0;
        return std::exp(-1.0 / (1.0 - x * x));
    }

    Jet<4> jet(double t) const {
        const double x = t / radius;
        if (x * x >= 0.999) return Jet<4>{};
        Jet<4> tj = Jet<4>::variable(t);
        Jet<4> xj = tj * (1.0 / radius);
        Jet<4> w = 1.0 - xj * xj;
        return exp(-reciprocal(w));
    }

    RadialFunction radial(int n) const {
        MollifierBump copy = *this;
        RadialFunction f = RadialFunction::from_rule(
            [copy](double t) { return cplx(copy(t), 0.0); }, n, radius);
        f.d1 = [copy](double t) { return cplx(copy.jet(t).deriv(1), 0.0); };
        f.d2 = [copy](double t) { return cplx(copy.jet(t).deriv(2), 0.0); };
        return f;
    }
};

inline const std::vector<MollifierBump>& pairing_bumps() {
    static const std::vector<MollifierBump> corpus = {
        {"moll_r2.5", 2.5},
        {"moll_r3.5", 3.5},
        {"moll_r4.5", 4.5},
    };
    return corpus;
}

struct AnalyticBump {
    std::string name;
    double (*value)(double);
};

inline const std::vector<AnalyticBump>& transform_bumps() {
    static const std::vector<AnalyticBump> corpus = {
        {"gauss", [](double t) { return std::exp(-t * t); }},
        {"poly_gauss", [](double t) { return (1.0 + t * t) * std::exp(-0.7 * t * t); }},
        {"cos_gauss", [](double t) { return std::cos(t) * std::exp(-0.5 * t * t); }},
        {"sech_gauss", [](double t) { return std::exp(-0.4 * t * t) / std::cosh(t); }},
        {"t2_gauss", [](double t) { return t * t * std::exp(-t * t); }},
    };
    return corpus;
}

inline RadialFunction bump_radial(const AnalyticBump& b, int n, double t_max = 9.0) {
    auto fn = b.value;
    return RadialFunction::from_rule(
        [fn](double t) { return cplx(fn(t), 0.0); }, n, t_max);
}

} // namespace hypspec
