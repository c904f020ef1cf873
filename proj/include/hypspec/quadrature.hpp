#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

// Nodes/weights of an N-point Gauss-Legendre rule on [-1, 1].
// Newton iteration on P_N with the Chebyshev-like initial guess; accurate
// to machine precision for the node counts used here (N <= a few hundred).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double p1 = 0.0, dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                p1 = 1.0;
                double p2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
                }
                dp = n * (x * p1 - p2) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[n - 1 - i] = weights[i];
        }
    }
};

inline const GaussLegendre& gauss_legendre_cached(int n) {
    static thread_local std::vector<GaussLegendre> cache;  // indexed by n
    if (static_cast<int>(cache.size()) <= n) cache.reserve(n + 1);
    while (static_cast<int>(cache.size()) <= n)
        cache.emplace_back(static_cast<int>(cache.size()) == 0 ? 1 : static_cast<int>(cache.size()));
    return cache[n];
}

// Composite Gauss-Legendre integration of f over [a, b] with `panels`
// panels of `order` points each.
template <typename F>
auto integrate_gl(F&& f, double a, double b, int panels, int order = 16)
    -> decltype(f(0.0)) {
    const GaussLegendre& rule = gauss_legendre_cached(order);
    using R = decltype(f(0.0));
    R total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        R acc{};
        for (int k = 0; k < order; ++k)
            acc += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        total += acc * (0.5 * h);
    }
    return total;
}

// Same integral twice at different resolutions; throws if the two
// estimates disagree by more than tol.
template <typename F>
auto integrate_gl_checked(F&& f, double a, double b, int panels, double tol,
                          int order = 16) -> decltype(f(0.0)) {
    auto coarse = integrate_gl(f, a, b, panels, order);
    auto fine = integrate_gl(f, a, b, panels + (panels + 1) / 2, order);
    double err = std::abs(fine - coarse);
    if (!(err <= tol))
        throw quadrature_error("quadrature did not converge", err, tol);
    return fine;
}

// How every numerical line/radial integral in the artifact is discretized.
struct QuadratureSpec {
    enum class Scheme { uniform_trapezoid, gauss_segments };

    double tau_max = 14.0;    // truncation of the critical line Re s = 1/2
    int nodes = 769;          // node count along the truncated line
    Scheme scheme = Scheme::uniform_trapezoid;
    double radial_t_max = 9.0;
    int radial_nodes = 352;

    void validate() const {
        if (!(tau_max > 0))
            throw precondition_error("tau_max > 0", "got " + std::to_string(tau_max));
        if (nodes < 16)
            throw precondition_error("nodes >= 16", "got " + std::to_string(nodes));
        if (!(radial_t_max > 0))
            throw precondition_error("radial_t_max > 0",
                                     "got " + std::to_string(radial_t_max));
        if (radial_nodes < 16)
            throw precondition_error("radial_nodes >= 16",
                                     "got " + std::to_string(radial_nodes));
    }
};

// Nodes and weights for integrating over tau in [-tau_max, tau_max].
struct LineRule {
    std::vector<double> tau;
    std::vector<double> weight;
};

inline LineRule make_line_rule(const QuadratureSpec& q) {
    q.validate();
    LineRule r;
    r.tau.reserve(q.nodes);
    r.weight.reserve(q.nodes);
    if (q.scheme == QuadratureSpec::Scheme::uniform_trapezoid) {
        const int n = q.nodes;
        const double h = 2.0 * q.tau_max / (n - 1);
        for (int i = 0; i < n; ++i) {
            r.tau.push_back(-q.tau_max + i * h);
            r.weight.push_back((i == 0 || i == n - 1) ? 0.5 * h : h);
        }
    } else {
        const int order = 16;
        const int panels = std::max(1, q.nodes / order);
        const GaussLegendre& rule = gauss_legendre_cached(order);
        const double h = 2.0 * q.tau_max / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = -q.tau_max + (p + 0.5) * h;
            for (int k = 0; k < order; ++k) {
                r.tau.push_back(mid + 0.5 * h * rule.nodes[k]);
                r.weight.push_back(0.5 * h * rule.weights[k]);
            }
        }
    }
    return r;
}

// Radial rule on [0, t_max] (composite Gauss-Legendre).
inline LineRule make_radial_rule(const QuadratureSpec& q) {
    q.validate();
    LineRule r;
    const int order = 16;
    const int panels = std::max(1, q.radial_nodes / order);
    const GaussLegendre& rule = gauss_legendre_cached(order);
    const double h = q.radial_t_max / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (int k = 0; k < order; ++k) {
            r.tau.push_back(mid + 0.5 * h * rule.nodes[k]);
            r.weight.push_back(0.5 * h * rule.weights[k]);
        }
    }
    return r;
}

// Least-squares slope of y against x.  Throws on degenerate input.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw precondition_error("fit needs >= 2 points",
                                 "got " + std::to_string(x.size()));
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size();
    my /= y.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx < 1e-30)
        throw precondition_error("fit abscissae must not be degenerate",
                                 "variance " + std::to_string(sxx));
    return sxy / sxx;
}

} // namespace hypspec
