#pragma once

#include <random>
#include <string>
#include <vector>

#include "hypspec/finite_model.hpp"

namespace hypspec {

// Scalar backends: rational (exact mode) and double (float mode) share the
// same expansion code paths.
template <typename S>
struct fm_backend;

template <>
struct fm_backend<rational> {
    static bool available(const FiniteModel& m) { return m.exact(); }
    static rational lambda(const SpectralLevel& l) { return l.value_q; }
    static std::vector<rational> apply_projector(const SpectralLevel& l,
                                                 const std::vector<rational>& v) {
        return q_apply(l.projector_q, v);
    }
    static double to_double(const rational& v) { return static_cast<double>(v); }
};

template <>
struct fm_backend<double> {
    static bool available(const FiniteModel&) { return true; }
    static double lambda(const SpectralLevel& l) { return l.value; }
    static std::vector<double> apply_projector(const SpectralLevel& l,
                                               const std::vector<double>& v) {
        std::vector<double> r(v.size(), 0.0);
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) r[i] += l.projector[i][j] * v[j];
        return r;
    }
    static double to_double(double v) { return v; }
};

template <typename S>
S fm_power(S base, int n) {
    S r = S(1);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

// Poincare data for P(Omega) = (Omega - lambda)^N on a model:
//   u  = P(Omega)^{-1} delta_{x0}   (the zonal fundamental solution seed,
//                                    "supported near the identity coset")
//   Pe = sum over the H-orbit of left translates of u
//      = P(Omega)^{-1} ch_{H.x0}    (asserted, exactly in rational mode)
template <typename S>
struct PoincareData {
    int N;
    S lambda;
    std::vector<S> u;
    std::vector<S> pe_sum;    // the finite sum of translates
    std::vector<S> pe;        // the P(Omega)-solve; equals pe_sum
    double assert_residual;   // max |pe_sum - pe| (0 in exact mode)
};

template <typename S>
PoincareData<S> poincare_series(const FiniteModel& m, int N, S lambda) {
    using B = fm_backend<S>;
    if (!B::available(m))
        throw precondition_error("rational mode available",
                                 "model spectrum is not integral");
    if (N < 1)
        throw precondition_error("N >= 1", "got " + std::to_string(N));

    // P(lambda_Phi) != 0 for every eigenvalue
    std::string offenders;
    for (const auto& l : m.spec.levels) {
        const S p = fm_power<S>(B::lambda(l) - lambda, N);
        const double pd = B::to_double(p);
        if (pd == 0.0 || std::abs(pd) < 1e-12)
            offenders += (offenders.empty() ? "" : ", ") +
                         std::to_string(B::to_double(B::lambda(l)));
    }
    if (!offenders.empty())
        throw precondition_error("P(lambda_Phi) != 0",
                                 "singular at eigenvalues {" + offenders + "}");

    PoincareData<S> pd;
    pd.N = N;
    pd.lambda = lambda;

    std::vector<S> delta0(m.nX, S(0)), deltaH(m.nX, S(0));
    delta0[m.x0] = S(1);
    for (int x : m.h_orbit) deltaH[x] = S(1);

    auto resolve = [&](const std::vector<S>& rhs) {
        std::vector<S> out(m.nX, S(0));
        for (const auto& l : m.spec.levels) {
            const S p = fm_power<S>(B::lambda(l) - lambda, N);
            const std::vector<S> proj = B::apply_projector(l, rhs);
            for (int i = 0; i < m.nX; ++i) out[i] = out[i] + proj[i] / p;
        }
        return out;
    };
    pd.u = resolve(delta0);
    pd.pe = resolve(deltaH);

    // Sum form: one translate of u per H-orbit point.
    pd.pe_sum.assign(m.nX, S(0));
    {
        std::vector<char> used(m.nX, 0);
        for (int h : m.H) {
            const int x = m.act[h][m.x0];
            if (used[x]) continue;
            used[x] = 1;
            const int hinv = m.G.inverse(h);
            for (int y = 0; y < m.nX; ++y)
                pd.pe_sum[y] = pd.pe_sum[y] + pd.u[m.act[hinv][y]];
        }
    }
    pd.assert_residual = 0.0;
    for (int y = 0; y < m.nX; ++y)
        pd.assert_residual = std::max(
            pd.assert_residual, std::abs(B::to_double(pd.pe_sum[y] - pd.pe[y])));
    if constexpr (std::is_same_v<S, rational>) {
        for (int y = 0; y < m.nX; ++y)
            if (pd.pe_sum[y] != pd.pe[y])
                throw error("Poincare sum form disagrees with the solve");
    } else {
        if (pd.assert_residual > 1e-12)
            throw error("Poincare sum form disagrees with the solve");
    }
    return pd;
}

// <f, Pe> for an Omega-eigenvector f at spectral level `level`; asserts the
// identity <f, Pe> = (f)_H / P(lambda_f) and returns (f)_H.
template <typename S>
S period_extraction(const FiniteModel& m, const PoincareData<S>& pd, int level,
                    const std::vector<S>& f) {
    using B = fm_backend<S>;
    const S lambda_f = B::lambda(m.spec.levels[level]);
    if (lambda_f == pd.lambda)
        throw precondition_error("lambda_f != lambda", "eigenvalue equals the shift");

    S bracket = S(0);
    for (int x = 0; x < m.nX; ++x) bracket = bracket + f[x] * pd.pe[x];
    S period = S(0);
    for (int x : m.h_orbit) period = period + f[x];
    const S rhs = period / fm_power<S>(lambda_f - pd.lambda, pd.N);
    if constexpr (std::is_same_v<S, rational>) {
        if (bracket != rhs) throw error("period identity failed exactly");
    } else {
        if (std::abs(bracket - rhs) >
            1e-10 * (1.0 + std::abs(rhs)))
            throw error("period identity failed");
    }
    return period;
}

// <f f', Pe> three ways ------------------------------------------------

template <typename S>
S direct_bracket(const FiniteModel& m, const PoincareData<S>& pd,
                 const std::vector<S>& f, const std::vector<S>& fp) {
    S acc = S(0);
    for (int x = 0; x < m.nX; ++x) acc = acc + f[x] * fp[x] * pd.pe[x];
    return acc;
}

// sum_Phi (Phi)_H <f f', Phi> / P(lambda_Phi), via the spectral projectors
// applied to the H-orbit indicator.
template <typename S>
S spectral_expansion(const FiniteModel& m, const PoincareData<S>& pd,
                     const std::vector<S>& f, const std::vector<S>& fp) {
    using B = fm_backend<S>;
    std::vector<S> deltaH(m.nX, S(0));
    for (int x : m.h_orbit) deltaH[x] = S(1);
    S acc = S(0);
    for (const auto& l : m.spec.levels) {
        const S p = fm_power<S>(B::lambda(l) - pd.lambda, pd.N);
        const std::vector<S> v = B::apply_projector(l, deltaH);
        S term = S(0);
        for (int x = 0; x < m.nX; ++x) term = term + v[x] * f[x] * fp[x];
        acc = acc + term / p;
    }
    return acc;
}

namespace detail {

// Eigenbasis of C[H_f] as vectors indexed by position in m.H, with norm^2
// in the (1/c) sum_h measure.
template <typename S>
struct HBasisVector {
    std::vector<S> values;
    S norm_sq;
};

template <typename S>
std::vector<HBasisVector<S>> h_basis(const FiniteModel& m);

template <>
inline std::vector<HBasisVector<rational>> h_basis<rational>(const FiniteModel& m) {
    if (m.omega_H.empty())
        throw precondition_error("H-side operator configured",
                                 "model has no h_operator");
    if (!m.spec_H.exact)
        throw precondition_error("rational mode on the H side",
                                 "H operator spectrum is not integral");
    std::vector<HBasisVector<rational>> out;
    const rational c = m.hk_overlap;
    for (const auto& l : m.spec_H.levels)
        for (size_t b = 0; b < l.basis_q.size(); ++b)
            out.push_back({l.basis_q[b], l.basis_norm_sq[b] / c});
    return out;
}

template <>
inline std::vector<HBasisVector<double>> h_basis<double>(const FiniteModel& m) {
    if (m.omega_H.empty())
        throw precondition_error("H-side operator configured",
                                 "model has no h_operator");
    std::vector<HBasisVector<double>> out;
    const double c = m.hk_overlap;
    for (const auto& l : m.spec_H.levels)
        for (const auto& b : l.basis) out.push_back({b, 1.0 / c});
    return out;
}

} // namespace detail

// Moment expansion: sum_F sum_{x in X} (x.f, F)_H (x.f', F)_H u(x) with F
// running over the eigenbasis of C[H_f].
template <typename S>
S moment_expansion_u(const FiniteModel& m, const std::vector<S>& u,
                     const std::vector<S>& f, const std::vector<S>& fp) {
    const auto basis = detail::h_basis<S>(m);
    const S c = S(m.hk_overlap);
    S acc = S(0);
    const int nH = static_cast<int>(m.H.size());
    for (const auto& F : basis) {
        S term = S(0);
        for (int x = 0; x < m.nX; ++x) {
            if (u[x] == S(0)) continue;
            S pa = S(0), pb = S(0);
            for (int i = 0; i < nH; ++i) {
                const int hx = m.act[m.H[i]][x];
                pa = pa + f[hx] * F.values[i];
                pb = pb + fp[hx] * F.values[i];
            }
            term = term + u[x] * (pa / c) * (pb / c);
        }
        acc = acc + term / F.norm_sq;
    }
    return acc;
}

template <typename S>
S moment_expansion(const FiniteModel& m, const PoincareData<S>& pd,
                   const std::vector<S>& f, const std::vector<S>& fp) {
    return moment_expansion_u(m, pd.u, f, fp);
}

struct TwoExpansionsReport {
    double direct;
    double spectral;
    double moment;
    bool exact_equal;     // rational mode: all three identical
    double max_rel_diff;  // float mode
};

template <typename S>
TwoExpansionsReport verify_two_expansions(const FiniteModel& m,
                                          const PoincareData<S>& pd,
                                          const std::vector<S>& f,
                                          const std::vector<S>& fp) {
    using B = fm_backend<S>;
    const S d = direct_bracket(m, pd, f, fp);
    const S s = spectral_expansion(m, pd, f, fp);
    const S mo = moment_expansion(m, pd, f, fp);
    TwoExpansionsReport rep;
    rep.direct = B::to_double(d);
    rep.spectral = B::to_double(s);
    rep.moment = B::to_double(mo);
    if constexpr (std::is_same_v<S, rational>) {
        rep.exact_equal = (d == s) && (s == mo);
        rep.max_rel_diff = 0.0;
    } else {
        rep.exact_equal = false;
        const double scale = std::max({1e-30, std::abs(rep.direct)});
        rep.max_rel_diff = std::max(std::abs(rep.direct - rep.spectral),
                                    std::abs(rep.direct - rep.moment)) /
                           scale;
    }
    return rep;
}

// Random vector in the eigenspace of the given level (exact mode).
inline QVector random_eigenvector(const FiniteModel& m, int level,
                                  std::mt19937_64& rng) {
    const auto& l = m.spec.levels[level];
    std::uniform_int_distribution<int> coef(-9, 9);
    QVector v(m.nX, 0);
    bool nonzero = false;
    while (!nonzero) {
        for (size_t b = 0; b < l.basis_q.size(); ++b) {
            const int cf = coef(rng);
            if (cf != 0) nonzero = true;
            for (int i = 0; i < m.nX; ++i) v[i] += rational(cf) * l.basis_q[b][i];
        }
    }
    return v;
}

// -- weight kernel (section-4 structure) ------------------------------------

template <typename S>
struct WeightKernelResult {
    std::vector<std::vector<S>> X;  // indexed by (Theta\H, Theta\H)
    S f_theta_at_identity;          // (F)_Theta
    bool rank_one;                  // F_Theta proportional to eta_F
    S weight;                       // the per-F weight; 0 if F_Theta == 0
};

namespace detail {

// Fiber masses U_p = sum_{h in H} u(h p x0) for p over Theta\P reps;
// together with G = H P these convert the X-sum of an H-invariant
// integrand against u into a Theta\P sum (with a residual 1/|K| factor).
template <typename S>
std::vector<S> fiber_masses(const FiniteModel& m, const std::vector<S>& u) {
    if (!m.has_parabolic)
        throw precondition_error("parabolic-like P configured",
                                 "weight kernel needs P and Theta = H /\\ P");
    // G = H P must cover the group for the fiber decomposition to hold.
    {
        std::vector<char> hit(m.G.order(), 0);
        size_t covered = 0;
        for (int h : m.H)
            for (int p : m.P) {
                const int g = m.G.mul(h, p);
                if (!hit[g]) {
                    hit[g] = 1;
                    ++covered;
                }
            }
        if (covered != static_cast<size_t>(m.G.order()))
            throw precondition_error("G = H P", "products do not cover G");
    }
    std::vector<S> mass(m.p_reps.size(), S(0));
    for (size_t pi = 0; pi < m.p_reps.size(); ++pi) {
        const int px = m.act[m.p_reps[pi]][m.x0];
        for (int h : m.H) mass[pi] = mass[pi] + u[m.act[h][px]];
    }
    return mass;
}

} // namespace detail

// X_{a,b}(h, h') = sum_{p in Theta\P} U_p phi_a(h p x0) phi_b(h' p x0) and
// the weight |(F)_Theta|^2-structured double sum against F_Theta.  phi_a
// and phi_b must be left-Theta-invariant (Eisenstein vectors from
// Theta-trivial characters are).
template <typename S>
WeightKernelResult<S> weight_kernel(const FiniteModel& m,
                                    const std::vector<S>& u,
                                    const std::vector<S>& phi_a,
                                    const std::vector<S>& phi_b,
                                    const detail::HBasisVector<S>& F) {
    const auto mass = detail::fiber_masses<S>(m, u);
    const size_t nh = m.theta_reps.size();
    WeightKernelResult<S> out;
    out.X.assign(nh, std::vector<S>(nh, S(0)));
    for (size_t i = 0; i < nh; ++i)
        for (size_t j = 0; j < nh; ++j) {
            S acc = S(0);
            for (size_t pi = 0; pi < m.p_reps.size(); ++pi) {
                if (mass[pi] == S(0)) continue;
                const int xa = m.act[m.G.mul(m.theta_reps[i], m.p_reps[pi])][m.x0];
                const int xb = m.act[m.G.mul(m.theta_reps[j], m.p_reps[pi])][m.x0];
                acc = acc + mass[pi] * phi_a[xa] * phi_b[xb];
            }
            out.X[i][j] = acc;
        }

    // F_Theta(h) = sum_{theta} F(theta h) on the Theta\H representatives.
    std::vector<int> hpos(m.G.order(), -1);
    for (size_t i = 0; i < m.H.size(); ++i) hpos[m.H[i]] = static_cast<int>(i);
    std::vector<S> f_theta(nh, S(0));
    for (size_t i = 0; i < nh; ++i)
        for (int th : m.Theta)
            f_theta[i] = f_theta[i] + F.values[hpos[m.G.mul(th, m.theta_reps[i])]];

    // identity representative: position of e in theta_reps (reps start at e)
    out.f_theta_at_identity = f_theta[0];
    out.rank_one = true;
    bool all_zero = true;
    for (const S& v : f_theta) all_zero = all_zero && (v == S(0));
    if (!all_zero && f_theta[0] == S(0)) out.rank_one = false;

    const S c = S(m.hk_overlap);
    const S k_size = S(static_cast<long long>(m.K.size()));
    S w = S(0);
    for (size_t i = 0; i < nh; ++i)
        for (size_t j = 0; j < nh; ++j)
            w = w + f_theta[i] * f_theta[j] * out.X[i][j];
    out.weight = w / (c * c * k_size) / F.norm_sq;
    return out;
}

// sum_F weight_F must reassemble the moment expansion of (phi_a, phi_b).
template <typename S>
struct WeightReassembly {
    S total;
    S moment;
    bool equal;
    bool all_rank_one;
};

template <typename S>
WeightReassembly<S> weight_reassembly(const FiniteModel& m,
                                      const std::vector<S>& u,
                                      const std::vector<S>& phi_a,
                                      const std::vector<S>& phi_b) {
    const auto basis = detail::h_basis<S>(m);
    WeightReassembly<S> out;
    out.total = S(0);
    out.all_rank_one = true;
    for (const auto& F : basis) {
        const auto wk = weight_kernel(m, u, phi_a, phi_b, F);
        out.all_rank_one = out.all_rank_one && wk.rank_one;
        out.total = out.total + wk.weight;
    }
    out.moment = moment_expansion_u(m, u, phi_a, phi_b);
    if constexpr (std::is_same_v<S, rational>) {
        out.equal = (out.total == out.moment);
    } else {
        out.equal = std::abs(out.total - out.moment) <=
                    1e-10 * (1.0 + std::abs(out.moment));
    }
    return out;
}

} // namespace hypspec
