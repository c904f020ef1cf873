#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hypspec/bumps.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/harish_chandra.hpp"
#include "hypspec/jet.hpp"
#include "hypspec/spherical.hpp"

namespace hypspec {

// Sign convention for resolvent shifts: the spectral variable is the
// positive Laplacian eigenvalue nu_tau = -lambda_{1/2+i tau}
// = (n-1)^2 (1/4 + tau^2), so the continuous spectrum is
// [(n-1)^2/4, +inf) and shifts like lambda = -5 sit safely below it.
// lambda_of_s itself keeps the geometric (nonpositive) eigenvalue.
inline double positive_eigenvalue(double tau, int n) {
    const double m = n - 1.0;
    return m * m * (0.25 + tau * tau);
}

inline double spectrum_bottom(int n) { return (n - 1.0) * (n - 1.0) / 4.0; }

struct SobolevIndex {
    double ell = 0.0;
};

// ||f||_ell^2 = (1/C_n) int |ftilde|^2 m_n(tau) (1 + |lambda_s|)^ell d tau.
inline double zonal_sobolev_norm(const SphericalTransform& F, SobolevIndex ell) {
    const double m = F.n - 1.0;
    double acc = 0.0;
    for (size_t j = 0; j < F.tau.size(); ++j) {
        const double abs_lambda = m * m * (0.25 + F.tau[j] * F.tau[j]);
        acc += F.weight[j] * std::norm(F.values[j]) *
               spectral_measure(F.tau[j], F.n) *
               std::pow(1.0 + abs_lambda, ell.ell);
    }
    return std::sqrt(acc / inversion_constant(F.n));
}

inline double zonal_sobolev_norm(const RadialFunction& f, SobolevIndex ell,
                                 const QuadratureSpec& q) {
    return zonal_sobolev_norm(spherical_transform(f, q), ell);
}

// delta_infty lies in H^{-ell} for every ell > n/2.
inline double delta_membership_threshold(int n) {
    if (n < 2)
        throw precondition_error("n >= 2", "got " + std::to_string(n));
    return 0.5 * n;
}

// Fundamental solution u of (-Delta - lambda)^N u = delta_infty.
struct FundamentalSolutionSpec {
    int N;
    cplx lambda;
    int n;
    QuadratureSpec q;

    FundamentalSolutionSpec(int N, cplx lambda, int n, QuadratureSpec q = {})
        : N(N), lambda(lambda), n(n), q(q) {
        if (N < 1)
            throw precondition_error("N >= 1", "got " + std::to_string(N));
        if (!(2.0 * N - 0.5 * n > 0.0))
            throw precondition_error("2N - n/2 > 0",
                                     "N = " + std::to_string(N) +
                                         ", n = " + std::to_string(n));
        q.validate();
    }

    // Distance from lambda to the spectral set {nu_tau}: both the
    // discretization (as specified) and the continuous half-line
    // [(n-1)^2/4, inf) it samples, so shifts that fall between grid nodes
    // are still caught.
    double spectral_distance() const {
        const LineRule line = make_line_rule(q);
        double d = INFINITY;
        for (double tau : line.tau)
            d = std::min(d, std::abs(lambda - positive_eigenvalue(tau, n)));
        const double bottom = spectrum_bottom(n);
        if (lambda.real() >= bottom)
            d = std::min(d, std::abs(lambda.imag()));
        else
            d = std::min(d, std::abs(lambda - bottom));
        return d;
    }

    double required_distance() const { return 1e-3 * (1.0 + std::abs(lambda)); }

    void check_conditioning() const {
        const double d = spectral_distance();
        const double r = required_distance();
        if (!(d >= r))
            throw conditioning_error("lambda too close to the spectral set", d, r);
    }
};

// Smallest N with 2N > n/2 + 2 (margin above the pointwise-evaluation
// requirement 2N > n/2 + 1).
inline int default_power(int n) {
    int N = 1;
    while (!(2.0 * N > 0.5 * n + 2.0)) ++N;
    return N;
}

// u(t) = (1/C_n) int psi_{1/2+i tau}(t) m_n(tau) / (nu_tau - lambda)^N d tau
// on a whole grid of t values (shared psi matrix).
inline std::vector<cplx> fundamental_solution_profile(
    const FundamentalSolutionSpec& spec, const std::vector<double>& ts,
    double tail_tol = 1e-4) {
    spec.check_conditioning();
    const LineRule line = make_line_rule(spec.q);

    // Tail envelope: m(tau)/|nu - lambda|^N ~ tau^{n-1-2N} at the cut.
    {
        const double tau_max = spec.q.tau_max;
        const double env =
            spectral_measure(tau_max, spec.n) /
            std::pow(std::abs(positive_eigenvalue(tau_max, spec.n) - spec.lambda),
                     spec.N);
        if (!(env <= tail_tol))
            throw quadrature_error(
                "fundamental solution tail too large; increase tau_max or N",
                env, tail_tol);
    }

    auto rows = detail::psi_matrix(ts, line, spec.n);
    const double C = inversion_constant(spec.n);
    std::vector<cplx> out(ts.size(), 0.0);
    for (size_t i = 0; i < ts.size(); ++i) {
        cplx acc = 0.0;
        for (size_t j = 0; j < line.tau.size(); ++j) {
            const cplx denom = std::pow(
                cplx(positive_eigenvalue(line.tau[j], spec.n), 0.0) - spec.lambda,
                spec.N);
            acc += line.weight[j] * rows[i][j] *
                   spectral_measure(line.tau[j], spec.n) / denom;
        }
        out[i] = acc / C;
    }
    return out;
}

inline cplx fundamental_solution(const FundamentalSolutionSpec& spec, double t) {
    if (!(t >= 0.0))
        throw precondition_error("t >= 0", "got " + std::to_string(t));
    return fundamental_solution_profile(spec, {t})[0];
}

// (-Delta_rad - lambda)^N phi for a mollifier bump, exactly (jets).
// Supports N = 1, 2 (the pairing tests use N = 2).
inline cplx shifted_power_apply(const MollifierBump& phi, int N, cplx lambda,
                                int n, double t) {
    if (N < 1 || N > 2)
        throw precondition_error("N in {1, 2}", "got " + std::to_string(N));
    const Jet<4> j = phi.jet(t);
    const double m = n - 1.0;
    double lap = 0.0, lap2 = 0.0;
    if (t == 0.0) {
        // Even-extension limit Delta phi(0) = n phi''(0); the pairing
        // quadrature never lands exactly at 0 for the N = 2 path.
        if (N == 2)
            throw precondition_error("t > 0 required for N = 2", "got t = 0");
        return -static_cast<double>(n) * j.deriv(2) - lambda * j.value();
    }
    const double c1 = std::cosh(t) / std::sinh(t);
    const double s2 = 1.0 / (std::sinh(t) * std::sinh(t));  // csch^2
    lap = j.deriv(2) + m * c1 * j.deriv(1);
    if (N == 1) return -lap - lambda * j.value();
    const double dlap = j.deriv(3) + m * (c1 * j.deriv(2) - s2 * j.deriv(1));
    const double ddlap = j.deriv(4) + m * (c1 * j.deriv(3) - 2.0 * s2 * j.deriv(2) +
                                           2.0 * s2 * c1 * j.deriv(1));
    lap2 = ddlap + m * c1 * dlap;
    // (-Delta - lambda)^2 = Delta^2 + 2 lambda Delta + lambda^2
    return lap2 + 2.0 * lambda * lap + lambda * lambda * j.value();
}

// Report of the two-sided resolvent bounds on a corpus: the ratios
// ||(pos-Laplacian - lambda) f||_{ell-2} / ||f||_ell observed per function.
struct ResolventReport {
    double lambda_distance;
    std::vector<double> ratios;  // one per corpus entry (0 for zero f)
    double min_ratio = INFINITY;
    double max_ratio = 0.0;
};

inline ResolventReport resolvent_bound_check(cplx lambda, double r, double ell,
                                             const std::vector<RadialFunction>& corpus,
                                             const QuadratureSpec& q) {
    ResolventReport rep;
    {
        const LineRule line = make_line_rule(q);
        double d = INFINITY;
        for (double tau : line.tau) {
            int n = corpus.empty() ? 2 : corpus.front().n;
            d = std::min(d, std::abs(lambda - positive_eigenvalue(tau, n)));
        }
        rep.lambda_distance = d;
        if (!(d >= r))
            throw precondition_error(
                "dist(lambda, spectrum) >= r",
                "distance " + detail::num_str(d) + " < r " + detail::num_str(r));
    }
    for (const RadialFunction& f : corpus) {
        SphericalTransform F = spherical_transform(f, q);
        const double m = F.n - 1.0;
        double num = 0.0, den = 0.0;
        for (size_t j = 0; j < F.tau.size(); ++j) {
            const double nu = positive_eigenvalue(F.tau[j], F.n);
            const double abs_lambda = m * m * (0.25 + F.tau[j] * F.tau[j]);
            const double base = F.weight[j] * std::norm(F.values[j]) *
                                spectral_measure(F.tau[j], F.n);
            num += base * std::norm(cplx(nu, 0.0) - lambda) *
                   std::pow(1.0 + abs_lambda, ell - 2.0);
            den += base * std::pow(1.0 + abs_lambda, ell);
        }
        if (den == 0.0) {
            rep.ratios.push_back(0.0);
            continue;
        }
        const double ratio = std::sqrt(num / den);
        rep.ratios.push_back(ratio);
        rep.min_ratio = std::min(rep.min_ratio, ratio);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    return rep;
}

// Truncated delta expansion paired against a bump:
//   (1/C_n) int_{|tau|<T} phitilde(tau) m_n(tau) d tau  ->  phi(0).
inline double delta_expansion_pairing(const RadialFunction& phi, double T,
                                      const QuadratureSpec& q) {
    QuadratureSpec qq = q;
    qq.tau_max = T;
    SphericalTransform F = spherical_transform(phi, qq);
    cplx acc = 0.0;
    for (size_t j = 0; j < F.tau.size(); ++j)
        acc += F.weight[j] * F.values[j] * spectral_measure(F.tau[j], F.n);
    return (acc / inversion_constant(F.n)).real();
}

} // namespace hypspec
