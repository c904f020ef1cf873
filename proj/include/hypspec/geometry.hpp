#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

// Which power of |lambda| the modular function of the rank-one parabolic
// uses.  `ad_determinant` (d = n-1) is the default everywhere in this
// library; `paper_intro` (d = n) is kept selectable for comparison.
enum class ModularConvention { ad_determinant, paper_intro };

// delta_P(m_lambda) = |lambda|^d.
inline double modular_function(double lambda_abs, int n,
                               ModularConvention convention =
                                   ModularConvention::ad_determinant) {
    if (!(lambda_abs > 0.0))
        throw domain_error("lambda_abs > 0", "got " + std::to_string(lambda_abs));
    if (n < 2)
        throw domain_error("n >= 2", "got " + std::to_string(n));
    const int d = (convention == ModularConvention::ad_determinant) ? n - 1 : n;
    return std::pow(lambda_abs, d);
}

// Point of hyperbolic n-space, either in the upper-half-space model or by
// its geodesic distance t from the basepoint.  Along the geodesic x = 0 the
// two charts are related by y = e^t.
struct HyperbolicPoint {
    enum class Model { upper_half_space, radial };

    Model model = Model::radial;
    std::vector<double> x;  // n-1 horospherical coordinates (half-space model)
    double y = 1.0;         // height (half-space model)
    double t = 0.0;         // geodesic distance from basepoint (radial model)

    static HyperbolicPoint radial(double t) {
        if (!(t >= 0.0))
            throw domain_error("t >= 0", "got " + std::to_string(t));
        HyperbolicPoint p;
        p.model = Model::radial;
        p.t = t;
        return p;
    }

    static HyperbolicPoint half_space(std::vector<double> x, double y) {
        if (!(y > 0.0))
            throw domain_error("y > 0", "got " + std::to_string(y));
        HyperbolicPoint p;
        p.model = Model::upper_half_space;
        p.x = std::move(x);
        p.y = y;
        return p;
    }

    // Geodesic distance from the basepoint (0, ..., 0, 1).
    double distance_from_basepoint() const {
        if (model == Model::radial) return t;
        double r2 = 0.0;
        for (double xi : x) r2 += xi * xi;
        // cosh d = 1 + (|x|^2 + (y-1)^2) / (2y)
        const double c = 1.0 + (r2 + (y - 1.0) * (y - 1.0)) / (2.0 * y);
        return std::acosh(c);
    }

    // Radial -> half-space along the geodesic x = 0 (so y = e^t).
    HyperbolicPoint to_half_space() const {
        if (model == Model::upper_half_space) return *this;
        return half_space({}, std::exp(t));
    }

    HyperbolicPoint to_radial() const {
        if (model == Model::radial) return *this;
        return radial(distance_from_basepoint());
    }
};

// Truncated Siegel domain: heights delta_P >= t0 in an n-dimensional X.
struct SiegelDomain {
    double t0;
    int n;

    SiegelDomain(double t0, int n) : t0(t0), n(n) {
        if (!(t0 > 0.0))
            throw domain_error("t0 > 0", "got " + std::to_string(t0));
        if (n < 2)
            throw domain_error("n >= 2", "got " + std::to_string(n));
    }
};

// Integrability of a growth exponent sigma against the Siegel-set measure.
// The defining inequalities are strict: sigma < 1/2 gives L^2, sigma < 1
// gives L^1, and values exactly on a threshold are classified divergent.
struct GrowthClass {
    enum class Kind { integrable, square_integrable, divergent_L1, divergent_L2 };

    double sigma;
    Kind classification;

    bool is_integrable() const { return sigma < 1.0; }
    bool is_square_integrable() const { return sigma < 0.5; }
};

inline GrowthClass classify_growth(double sigma) {
    if (!std::isfinite(sigma))
        throw domain_error("sigma finite", "got " + std::to_string(sigma));
    GrowthClass::Kind kind;
    if (sigma < 0.5)
        kind = GrowthClass::Kind::square_integrable;
    else if (sigma == 0.5)
        kind = GrowthClass::Kind::divergent_L2;
    else if (sigma < 1.0)
        kind = GrowthClass::Kind::integrable;
    else
        kind = GrowthClass::Kind::divergent_L1;
    return {sigma, kind};
}

inline std::string to_string(GrowthClass::Kind k) {
    switch (k) {
        case GrowthClass::Kind::integrable: return "integrable";
        case GrowthClass::Kind::square_integrable: return "square_integrable";
        case GrowthClass::Kind::divergent_L1: return "divergent_L1";
        case GrowthClass::Kind::divergent_L2: return "divergent_L2";
    }
    return "?";
}

// The truncated height integral of the Siegel-set estimate,
//   int_{t0}^{cutoff} lambda^{n (sigma - 1) - 1} d lambda,
// in closed form.  cutoff may be +infinity; the improper integral is finite
// exactly when classify_growth(sigma).is_integrable().
inline double siegel_measure_tail(const SiegelDomain& domain, double sigma,
                                  double cutoff) {
    if (!(cutoff > domain.t0))
        throw domain_error("cutoff > t0",
                           "cutoff " + std::to_string(cutoff) + " vs t0 " +
                               std::to_string(domain.t0));
    const double e = domain.n * (sigma - 1.0) - 1.0;
    if (std::isinf(cutoff)) {
        if (e >= -1.0) return INFINITY;
        return -std::pow(domain.t0, e + 1.0) / (e + 1.0);
    }
    if (e == -1.0) return std::log(cutoff / domain.t0);
    return (std::pow(cutoff, e + 1.0) - std::pow(domain.t0, e + 1.0)) / (e + 1.0);
}

} // namespace hypspec
