#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypspec/errors.hpp"

namespace hypspec {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

using QMatrix = std::vector<std::vector<rational>>;
using QVector = std::vector<rational>;

inline QMatrix q_identity(size_t n) {
    QMatrix m(n, QVector(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    QMatrix r(n, QVector(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

inline QVector q_apply(const QMatrix& a, const QVector& v) {
    QVector r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

inline rational q_dot(const QVector& a, const QVector& b) {
    rational r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// Characteristic polynomial by Faddeev-LeVerrier:
// det(xI - A) = x^n + c[0] x^{n-1} + ... + c[n-1].
inline std::vector<rational> char_poly(const QMatrix& A) {
    const size_t n = A.size();
    std::vector<rational> c(n);
    QMatrix AM = A;  // A * M_k, starting from M_1 = I
    for (size_t k = 1; k <= n; ++k) {
        rational tr = 0;
        for (size_t i = 0; i < n; ++i) tr += AM[i][i];
        c[k - 1] = -tr / static_cast<int>(k);
        if (k < n) {
            for (size_t i = 0; i < n; ++i) AM[i][i] += c[k - 1];  // M_{k+1}
            AM = q_mul(A, AM);
        }
    }
    return c;
}

// Integer roots (with multiplicity) of the monic char poly; returns empty
// if the polynomial does not split over the integers.  Symmetric integer
// matrices have real spectra, and rational eigenvalues of integer matrices
// are integers, so "splits over Z" == "rational mode available".
inline bool integer_spectrum(const std::vector<rational>& coeffs,
                             std::vector<long long>& roots) {
    // work with p(x) = x^n + c0 x^{n-1} + ... ; all c integers here
    std::vector<bigint> p;
    p.push_back(1);
    for (const rational& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1) return false;
        p.push_back(boost::multiprecision::numerator(c));
    }
    roots.clear();
    // strip zero roots
    while (p.size() > 1 && p.back() == 0) {
        roots.push_back(0);
        p.pop_back();
    }
    auto eval = [&](const std::vector<bigint>& q, long long x) {
        bigint acc = 0;
        for (const bigint& cc : q) acc = acc * x + cc;
        return acc;
    };
    while (p.size() > 1) {
        const bigint tail = p.back();
        if (tail == 0) {
            roots.push_back(0);
            p.pop_back();
            continue;
        }
        bool found = false;
        // candidate roots: divisors of the constant term
        bigint a = boost::multiprecision::abs(tail);
        for (bigint d = 1; d * d <= a && !found; ++d) {
            if (a % d != 0) continue;
            const bigint cands[2] = {d, bigint(a / d)};
            for (const bigint& cand : cands) {
                for (int sign : {1, -1}) {
                    const bigint r = sign * cand;
                    if (r < -1000000 || r > 1000000) continue;
                    const long long rl = r.convert_to<long long>();
                    if (eval(p, rl) == 0) {
                        roots.push_back(rl);
                        // deflate p by (x - rl)
                        std::vector<bigint> q(p.size() - 1);
                        bigint carry = 0;
                        for (size_t i = 0; i + 1 < p.size(); ++i) {
                            carry = carry * rl + p[i];
                            q[i] = carry;
                        }
                        p = std::move(q);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) return false;
    }
    std::sort(roots.begin(), roots.end());
    return true;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> q_rref(QMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    const size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t sel = row;
        while (sel < nr && m[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(m[sel], m[row]);
        const rational inv = m[row][col];
        for (size_t j = 0; j < nc; ++j) m[row][j] /= inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const rational f = m[i][col];
            for (size_t j = 0; j < nc; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Solve A x = b exactly (A square nonsingular).
inline QVector q_solve(QMatrix A, QVector b) {
    const size_t n = A.size();
    for (size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
    auto pivots = q_rref(A);
    if (pivots.size() != n || pivots.back() >= n)
        throw precondition_error("nonsingular system", "exact solve failed");
    QVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

} // namespace hypspec
