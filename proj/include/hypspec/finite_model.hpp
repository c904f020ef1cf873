#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypspec/errors.hpp"
#include "hypspec/exactq.hpp"
#include "hypspec/permgroup.hpp"

namespace hypspec {

// Finite Gelfand-pair playground: a finite group G_f with subgroups
// K_f (maximal-compact analogue), H_f (period subgroup), and optionally a
// parabolic-like P_f with Theta_f = H_f /\ P_f.  The "automorphic" space
// is X = G_f/K_f with counting measure; the operator Omega_f is an
// integer symmetrized sum of double-coset (Hecke) operators, so rational
// mode is exact whenever the spectrum is integral.
//
// Conventions (c := |H /\ K|):
//   <f, g>_X      = sum_x f gbar                      (counting measure)
//   (f)_H         = sum over the H-orbit of x0 of f   (x0 = identity coset)
//   <phi, psi>_H  = (1/c) sum_{h in H} phi psibar     (functions on H_f)
//   (x.f, F)_H    = (1/c) sum_{h in H} f(h x) F(h)
//   (F)_Theta     = sum_{theta in Theta} F(theta)

struct WeightedWord {
    std::vector<std::string> word;
    long long weight = 1;
};

struct ModelSpec {
    std::string name;
    int degree = 0;
    std::vector<std::pair<std::string, Perm>> generators;
    std::vector<std::vector<std::string>> K_words;
    std::vector<std::vector<std::string>> H_words;
    std::vector<std::vector<std::string>> Theta_words;  // optional
    std::vector<std::vector<std::string>> P_words;      // optional
    std::vector<WeightedWord> omega_words;
    std::vector<WeightedWord> h_omega_words;            // H-side operator
    std::map<std::string, std::map<std::string, rational>> characters;  // of P
    size_t max_order = 10000;
};

// One eigenvalue level: exact projector (rational mode) and a float copy.
struct SpectralLevel {
    double value = 0.0;
    rational value_q = 0;
    QMatrix projector_q;                        // exact mode only
    std::vector<std::vector<double>> projector; // always filled
    std::vector<QVector> basis_q;               // orthogonal, exact mode
    std::vector<rational> basis_norm_sq;
    std::vector<std::vector<double>> basis;     // orthonormal, always filled
};

struct Diagonalization {
    bool exact = false;
    std::vector<SpectralLevel> levels;

    size_t dimension() const {
        size_t d = 0;
        for (const auto& l : levels) d += l.basis.size();
        return d;
    }
};

namespace detail {

inline Diagonalization diagonalize(const std::vector<std::vector<long long>>& M) {
    const size_t n = M.size();
    Diagonalization out;

    QMatrix A(n, QVector(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A[i][j] = M[i][j];

    std::vector<long long> roots;
    bool exact = n <= 64;
    if (exact) exact = integer_spectrum(char_poly(A), roots);

    if (exact) {
        out.exact = true;
        std::vector<long long> distinct;
        for (long long r : roots)
            if (distinct.empty() || distinct.back() != r) distinct.push_back(r);
        for (long long lam : distinct) {
            SpectralLevel lvl;
            lvl.value = static_cast<double>(lam);
            lvl.value_q = lam;
            // Lagrange projector: prod_{mu != lam} (A - mu) / (lam - mu).
            QMatrix E = q_identity(n);
            rational denom = 1;
            for (long long mu : distinct) {
                if (mu == lam) continue;
                QMatrix Ashift = A;
                for (size_t i = 0; i < n; ++i) Ashift[i][i] -= mu;
                E = q_mul(E, Ashift);
                denom *= rational(lam - mu);
            }
            for (auto& row : E)
                for (auto& v : row) v /= denom;
            lvl.projector_q = E;

            // Orthogonal rational eigenspace basis: row space of E, then
            // Gram-Schmidt without normalization.
            QMatrix R = E;
            q_rref(R);
            std::vector<QVector> basis;
            for (auto& row : R) {
                QVector v = row;
                for (size_t j = 0; j < basis.size(); ++j) {
                    const rational coef =
                        q_dot(v, basis[j]) / q_dot(basis[j], basis[j]);
                    for (size_t t = 0; t < n; ++t) v[t] -= coef * basis[j][t];
                }
                bool nonzero = false;
                for (const auto& t : v) nonzero |= (t != 0);
                if (nonzero) basis.push_back(std::move(v));
            }
            for (auto& v : basis) lvl.basis_norm_sq.push_back(q_dot(v, v));
            lvl.basis_q = std::move(basis);

            lvl.projector.assign(n, std::vector<double>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    lvl.projector[i][j] = static_cast<double>(E[i][j]);
            for (size_t b = 0; b < lvl.basis_q.size(); ++b) {
                std::vector<double> vf(n);
                const double nn = std::sqrt(static_cast<double>(lvl.basis_norm_sq[b]));
                for (size_t t = 0; t < n; ++t)
                    vf[t] = static_cast<double>(lvl.basis_q[b][t]) / nn;
                lvl.basis.push_back(std::move(vf));
            }
            out.levels.push_back(std::move(lvl));
        }
        return out;
    }

    // Float path.
    Eigen::MatrixXd Mf(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) Mf(i, j) = static_cast<double>(M[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Mf);
    if (solver.info() != Eigen::Success)
        throw error("eigendecomposition failed");
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && std::abs(vals(j) - vals(i)) < 1e-9 * (1 + std::abs(vals(i))))
            ++j;
        SpectralLevel lvl;
        lvl.value = vals(i);
        lvl.projector.assign(n, std::vector<double>(n, 0.0));
        for (size_t k = i; k < j; ++k) {
            std::vector<double> v(n);
            for (size_t t = 0; t < n; ++t) v[t] = vecs(t, k);
            for (size_t r = 0; r < n; ++r)
                for (size_t t = 0; t < n; ++t)
                    lvl.projector[r][t] += v[r] * v[t];
            lvl.basis.push_back(std::move(v));
        }
        out.levels.push_back(std::move(lvl));
        i = j;
    }
    return out;
}

} // namespace detail

class FiniteModel {
public:
    FiniteModel(std::string name, PermGroup g)
        : name(std::move(name)), G(std::move(g)) {}

    std::string name;
    PermGroup G;
    std::vector<int> K, H, Theta, P;  // sorted element ids
    bool has_parabolic = false;

    int nX = 0;
    int x0 = 0;
    std::vector<int> coset_of;   // element id -> X index
    std::vector<int> coset_rep;  // X index -> representative element id
    std::vector<std::vector<int>> act;  // act[g][x]: X index of g . x

    std::vector<std::vector<long long>> omega;    // operator on X
    std::vector<std::vector<long long>> omega_H;  // operator on C[H_f]
    Diagonalization spec;    // of omega
    Diagonalization spec_H;  // of omega_H
    bool gelfand_pair = false;  // Hecke algebra of (G, K) commutative

    std::map<std::string, std::vector<rational>> characters;  // on P, by name

    int hk_overlap = 1;          // c = |H /\ K|
    std::vector<int> h_orbit;    // X indices of H . x0
    std::vector<int> theta_reps; // Theta\H coset representatives (element ids)
    std::vector<int> p_reps;     // Theta\P coset representatives, when P given

    bool exact() const { return spec.exact; }

    static FiniteModel build(const ModelSpec& ms);

    // -- elementary helpers ------------------------------------------------

    int act_on(int g, int x) const { return act[g][x]; }

    std::vector<double> delta_x0() const {
        std::vector<double> d(nX, 0.0);
        d[x0] = 1.0;
        return d;
    }

    std::vector<double> delta_H() const {
        std::vector<double> d(nX, 0.0);
        for (int x : h_orbit) d[x] = 1.0;
        return d;
    }

    double period_H(const std::vector<double>& f) const {
        double acc = 0;
        for (int x : h_orbit) acc += f[x];
        return acc;
    }

    rational period_H(const QVector& f) const {
        rational acc = 0;
        for (int x : h_orbit) acc += f[x];
        return acc;
    }

    // Eisenstein-like vector induced from a P-character: phi(g K) = chi(p)
    // for g = p k.  Requires G = P K and chi trivial on P /\ K.
    std::vector<double> eisenstein_vector(const std::string& character) const;

    std::vector<long long> eigenvalue_list() const {
        std::vector<long long> out;
        for (const auto& l : spec.levels)
            out.push_back(static_cast<long long>(std::llround(l.value)));
        return out;
    }
};

// -- construction ----------------------------------------------------------

namespace detail {

inline Perm word_to_perm(const std::vector<std::string>& word,
                         const std::vector<std::pair<std::string, Perm>>& gens,
                         int degree) {
    Perm p = perm_identity(degree);
    for (const std::string& name : word) {
        bool found = false;
        for (const auto& [gname, gperm] : gens) {
            if (gname == name) {
                p = perm_mul(p, gperm);
                found = true;
                break;
            }
        }
        if (!found)
            throw precondition_error("known generator name", "'" + name + "'");
    }
    return p;
}

// T_{K a K} acting on functions on G/K: (T f)(gK) = sum_{b K in K a K} f(g b K).
inline void add_hecke(std::vector<std::vector<long long>>& M, const PermGroup& G,
                      const std::vector<int>& K, const std::vector<int>& coset_of,
                      const std::vector<int>& coset_rep, int a, long long w) {
    // left cosets b K inside K a K: reps b = k a for k in K, deduplicated
    std::vector<char> seen(G.order(), 0);
    std::vector<int> reps;
    for (int k : K) {
        const int b = G.mul(k, a);
        // dedupe by the coset b K: mark all b k'
        if (seen[b]) continue;
        reps.push_back(b);
        for (int k2 : K) seen[G.mul(b, k2)] = 1;
    }
    const int nX = static_cast<int>(coset_rep.size());
    for (int x = 0; x < nX; ++x) {
        const int g = coset_rep[x];
        for (int b : reps) {
            const int y = coset_of[G.mul(g, b)];
            M[x][y] += w;
        }
    }
}

} // namespace detail

inline FiniteModel FiniteModel::build(const ModelSpec& ms) {
    std::vector<Perm> gens;
    for (const auto& [name, perm] : ms.generators) gens.push_back(perm);
    FiniteModel m{ms.name, PermGroup(ms.degree, gens, ms.max_order)};

    auto words_to_ids = [&](const std::vector<std::vector<std::string>>& words) {
        std::vector<int> ids;
        for (const auto& w : words)
            ids.push_back(m.G.id_of(detail::word_to_perm(w, ms.generators, ms.degree)));
        return ids;
    };

    m.K = m.G.subgroup_closure(words_to_ids(ms.K_words));
    m.H = m.G.subgroup_closure(words_to_ids(ms.H_words));
    check_subgroup(m.G, m.K, "K");
    check_subgroup(m.G, m.H, "H");

    if (!ms.P_words.empty()) {
        m.P = m.G.subgroup_closure(words_to_ids(ms.P_words));
        check_subgroup(m.G, m.P, "P");
        m.has_parabolic = true;
        m.Theta = PermGroup::intersect(m.H, m.P);
        if (!ms.Theta_words.empty()) {
            auto theta_given = m.G.subgroup_closure(words_to_ids(ms.Theta_words));
            if (theta_given != m.Theta)
                throw precondition_error("Theta = H /\\ P",
                                         "provided Theta differs from H /\\ P");
        }
    } else if (!ms.Theta_words.empty()) {
        m.Theta = m.G.subgroup_closure(words_to_ids(ms.Theta_words));
        check_subgroup(m.G, m.Theta, "Theta");
        // Theta must sit inside H
        for (int t : m.Theta)
            if (!std::binary_search(m.H.begin(), m.H.end(), t))
                throw precondition_error("Theta subset of H", "element escapes H");
    }

    // cosets of K: X = G/K
    m.coset_of.assign(m.G.order(), -1);
    for (int g = 0; g < m.G.order(); ++g) {
        if (m.coset_of[g] != -1) continue;
        const int x = static_cast<int>(m.coset_rep.size());
        m.coset_rep.push_back(g);
        for (int k : m.K) m.coset_of[m.G.mul(g, k)] = x;
    }
    m.nX = static_cast<int>(m.coset_rep.size());
    m.x0 = m.coset_of[0];

    m.act.assign(m.G.order(), std::vector<int>(m.nX));
    for (int g = 0; g < m.G.order(); ++g)
        for (int x = 0; x < m.nX; ++x)
            m.act[g][x] = m.coset_of[m.G.mul(g, m.coset_rep[x])];

    // Omega: symmetrized sum of Hecke operators
    m.omega.assign(m.nX, std::vector<long long>(m.nX, 0));
    if (ms.omega_words.empty())
        throw precondition_error("operator words nonempty", "no Omega given");
    for (const WeightedWord& ww : ms.omega_words) {
        const int a = m.G.id_of(detail::word_to_perm(ww.word, ms.generators, ms.degree));
        detail::add_hecke(m.omega, m.G, m.K, m.coset_of, m.coset_rep, a, ww.weight);
        detail::add_hecke(m.omega, m.G, m.K, m.coset_of, m.coset_rep,
                          m.G.inverse(a), ww.weight);
    }
    for (int i = 0; i < m.nX; ++i)
        for (int j = 0; j < i; ++j)
            if (m.omega[i][j] != m.omega[j][i])
                throw precondition_error("Omega symmetric",
                                         "symmetrized operator is not symmetric");

    // Gelfand-pair report: commutativity of the double-coset operators.
    {
        std::vector<std::vector<std::vector<long long>>> ops;
        std::vector<char> covered(m.G.order(), 0);
        for (int a = 0; a < m.G.order(); ++a) {
            if (covered[a]) continue;
            for (int k1 : m.K)
                for (int k2 : m.K) covered[m.G.mul(m.G.mul(k1, a), k2)] = 1;
            std::vector<std::vector<long long>> T(m.nX,
                                                  std::vector<long long>(m.nX, 0));
            detail::add_hecke(T, m.G, m.K, m.coset_of, m.coset_rep, a, 1);
            ops.push_back(std::move(T));
        }
        m.gelfand_pair = true;
        for (size_t i = 0; i < ops.size() && m.gelfand_pair; ++i)
            for (size_t j = i + 1; j < ops.size() && m.gelfand_pair; ++j) {
                for (int r = 0; r < m.nX && m.gelfand_pair; ++r)
                    for (int c2 = 0; c2 < m.nX; ++c2) {
                        long long ab = 0, ba = 0;
                        for (int t = 0; t < m.nX; ++t) {
                            ab += ops[i][r][t] * ops[j][t][c2];
                            ba += ops[j][r][t] * ops[i][t][c2];
                        }
                        if (ab != ba) {
                            m.gelfand_pair = false;
                            break;
                        }
                    }
            }
    }

    // H /\ K and the H-orbit of x0
    {
        auto hk = PermGroup::intersect(m.H, m.K);
        m.hk_overlap = static_cast<int>(hk.size());
        std::vector<char> in(m.nX, 0);
        for (int h : m.H) {
            const int x = m.act[h][m.x0];
            if (!in[x]) {
                in[x] = 1;
                m.h_orbit.push_back(x);
            }
        }
        std::sort(m.h_orbit.begin(), m.h_orbit.end());
    }

    // Theta\H coset representatives
    if (!m.Theta.empty()) {
        std::vector<char> seen(m.G.order(), 0);
        for (int h : m.H) {
            if (seen[h]) continue;
            m.theta_reps.push_back(h);
            for (int th : m.Theta) seen[m.G.mul(th, h)] = 1;
        }
    }
    // Theta\P coset representatives
    if (m.has_parabolic) {
        std::vector<char> seen(m.G.order(), 0);
        for (int p : m.P) {
            if (seen[p]) continue;
            m.p_reps.push_back(p);
            for (int th : m.Theta) seen[m.G.mul(th, p)] = 1;
        }
    }

    // H-side operator on C[H_f]
    if (!ms.h_omega_words.empty()) {
        const int nH = static_cast<int>(m.H.size());
        std::vector<int> hpos(m.G.order(), -1);
        for (int i = 0; i < nH; ++i) hpos[m.H[i]] = i;
        m.omega_H.assign(nH, std::vector<long long>(nH, 0));
        for (const WeightedWord& ww : ms.h_omega_words) {
            const int a = m.G.id_of(detail::word_to_perm(ww.word, ms.generators, ms.degree));
            if (hpos[a] < 0)
                throw precondition_error("H-operator words lie in H",
                                         "element escapes H");
            for (int i = 0; i < nH; ++i) {
                // right translations h -> h a and h -> h a^{-1}
                m.omega_H[i][hpos[m.G.mul(m.H[i], a)]] += ww.weight;
                m.omega_H[i][hpos[m.G.mul(m.H[i], m.G.inverse(a))]] += ww.weight;
            }
        }
        m.spec_H = detail::diagonalize(m.omega_H);
    }

    m.spec = detail::diagonalize(m.omega);

    // characters of P
    for (const auto& [cname, cvals] : ms.characters) {
        if (!m.has_parabolic)
            throw precondition_error("characters need P", "no parabolic given");
        std::vector<rational> chi(m.G.order(), 0);
        chi[0] = 1;
        // extend from generator values by closure over P
        std::vector<int> queue = {0};
        for (size_t head = 0; head < queue.size(); ++head) {
            for (const auto& [gw, gv] : cvals) {
                std::vector<std::string> word;
                for (char ch : gw) word.push_back(std::string(1, ch));
                const int g = m.G.id_of(detail::word_to_perm(word, ms.generators, ms.degree));
                if (!std::binary_search(m.P.begin(), m.P.end(), g))
                    throw precondition_error("character generators lie in P",
                                             "'" + gw + "'");
                const int nxt = m.G.mul(queue[head], g);
                const rational val = chi[queue[head]] * gv;
                if (chi[nxt] == 0 && nxt != 0) {
                    chi[nxt] = val;
                    queue.push_back(nxt);
                } else if (chi[nxt] != val) {
                    throw precondition_error("character multiplicative",
                                             "inconsistent extension of '" +
                                                 cname + "'");
                }
            }
        }
        for (int p : m.P)
            if (chi[p] == 0)
                throw precondition_error("character defined on all of P",
                                         "generators of '" + cname +
                                             "' do not span P");
        std::vector<rational> packed(m.P.size());
        for (size_t i = 0; i < m.P.size(); ++i) packed[i] = chi[m.P[i]];
        m.characters[cname] = std::move(packed);
    }

    return m;
}

inline std::vector<double> FiniteModel::eisenstein_vector(
    const std::string& character) const {
    auto it = characters.find(character);
    if (it == characters.end())
        throw precondition_error("known character", "'" + character + "'");
    const auto& chi = it->second;

    // chi must be trivial on P /\ K (well-definedness) and on Theta.
    std::vector<char> inK(G.order(), 0);
    for (int k : K) inK[k] = 1;
    for (size_t i = 0; i < P.size(); ++i) {
        if (inK[P[i]] && chi[i] != 1)
            throw precondition_error("character trivial on P /\\ K",
                                     "phi would be ill-defined");
        if (std::binary_search(Theta.begin(), Theta.end(), P[i]) && chi[i] != 1)
            throw precondition_error("character trivial on Theta",
                                     "Theta-averaging would not apply");
    }

    std::vector<double> f(nX, 0.0);
    std::vector<char> done(nX, 0);
    for (size_t i = 0; i < P.size(); ++i) {
        const int x = act[P[i]][x0];  // coset p K
        if (!done[x]) {
            done[x] = 1;
            f[x] = static_cast<double>(chi[i]);
        } else if (f[x] != static_cast<double>(chi[i])) {
            throw precondition_error("character trivial on P /\\ K",
                                     "inconsistent values on a coset");
        }
    }
    for (int x = 0; x < nX; ++x)
        if (!done[x])
            throw precondition_error("G = P K", "coset not reached by P");
    return f;
}

} // namespace hypspec
