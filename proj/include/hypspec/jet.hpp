#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace hypspec {

// Truncated Taylor arithmetic: value and derivatives up to order M at a
// point.  Used to evaluate exact derivatives of the bump corpus (and of
// anything else built from smooth closed forms) without finite differences.
template <int M>
struct Jet {
    std::array<double, M + 1> d{};  // d[k] = f^(k)(x)

    Jet() = default;
    explicit Jet(double value) { d[0] = value; }

    static Jet variable(double x) {
        Jet j(x);
        if constexpr (M >= 1) j.d[1] = 1.0;
        return j;
    }

    double value() const { return d[0]; }
    double deriv(int k) const { return d[k]; }
};

namespace detail {
inline constexpr double binom_table[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0, 0},   {1, 2, 1, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0},  {1, 4, 6, 4, 1, 0, 0},   {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1}};
}

template <int M>
Jet<M> operator+(const Jet<M>& a, const Jet<M>& b) {
    Jet<M> r;
    for (int k = 0; k <= M; ++k) r.d[k] = a.d[k] + b.d[k];
    return r;
}

template <int M>
Jet<M> operator-(const Jet<M>& a, const Jet<M>& b) {
    Jet<M> r;
    for (int k = 0; k <= M; ++k) r.d[k] = a.d[k] - b.d[k];
    return r;
}

template <int M>
Jet<M> operator-(const Jet<M>& a) {
    Jet<M> r;
    for (int k = 0; k <= M; ++k) r.d[k] = -a.d[k];
    return r;
}

// Leibniz rule.
template <int M>
Jet<M> operator*(const Jet<M>& a, const Jet<M>& b) {
    static_assert(M <= 6, "extend binom_table for higher orders");
    Jet<M> r;
    for (int k = 0; k <= M; ++k) {
        double acc = 0;
        for (int j = 0; j <= k; ++j)
            acc += detail::binom_table[k][j] * a.d[j] * b.d[k - j];
        r.d[k] = acc;
    }
    return r;
}

template <int M> Jet<M> operator+(const Jet<M>& a, double c) { Jet<M> r = a; r.d[0] += c; return r; }
template <int M> Jet<M> operator+(double c, const Jet<M>& a) { return a + c; }
template <int M> Jet<M> operator-(const Jet<M>& a, double c) { Jet<M> r = a; r.d[0] -= c; return r; }
template <int M> Jet<M> operator-(double c, const Jet<M>& a) { return (-a) + c; }
template <int M>
Jet<M> operator*(const Jet<M>& a, double c) {
    Jet<M> r;
    for (int k = 0; k <= M; ++k) r.d[k] = a.d[k] * c;
    return r;
}
template <int M> Jet<M> operator*(double c, const Jet<M>& a) { return a * c; }

// Composition with a univariate analytic g given its derivatives at a.d[0].
// Uses the Faa di Bruno recurrence written as repeated products of the
// "perturbation" part; orders up to 6 keep this cheap.
template <int M>
Jet<M> compose(const std::array<double, M + 1>& g, const Jet<M>& a) {
    // h = sum_k g[k]/k! * (a - a0)^k, truncated at order M.
    Jet<M> pert = a;
    pert.d[0] = 0.0;
    Jet<M> result;
    result.d[0] = g[0];
    Jet<M> power(1.0);  // pert^k
    double factorial = 1.0;
    for (int k = 1; k <= M; ++k) {
        power = power * pert;
        factorial *= k;
        for (int j = 0; j <= M; ++j) result.d[j] += g[k] / factorial * power.d[j];
    }
    return result;
}

template <int M>
Jet<M> exp(const Jet<M>& a) {
    std::array<double, M + 1> g{};
    double e = std::exp(a.d[0]);
    for (int k = 0; k <= M; ++k) g[k] = e;
    return compose<M>(g, a);
}

template <int M>
Jet<M> reciprocal(const Jet<M>& a) {
    std::array<double, M + 1> g{};
    double inv = 1.0 / a.d[0];
    double p = inv;
    double sign = 1.0;
    double factorial = 1.0;
    for (int k = 0; k <= M; ++k) {
        // d^k/dx^k (1/x) = (-1)^k k! x^{-k-1}
        g[k] = sign * factorial * p;
        p *= inv;
        sign = -sign;
        factorial *= (k + 1);
    }
    return compose<M>(g, a);
}

template <int M>
Jet<M> operator/(const Jet<M>& a, const Jet<M>& b) { return a * reciprocal(b); }
template <int M>
Jet<M> operator/(double c, const Jet<M>& b) { return reciprocal(b) * c; }
template <int M>
Jet<M> operator/(const Jet<M>& a, double c) { return a * (1.0 / c); }

template <int M>
Jet<M> cos(const Jet<M>& a) {
    std::array<double, M + 1> g{};
    double c = std::cos(a.d[0]), s = std::sin(a.d[0]);
    const double cyc[4] = {c, -s, -c, s};
    for (int k = 0; k <= M; ++k) g[k] = cyc[k % 4];
    return compose<M>(g, a);
}

template <int M>
Jet<M> sin(const Jet<M>& a) {
    std::array<double, M + 1> g{};
    double c = std::cos(a.d[0]), s = std::sin(a.d[0]);
    const double cyc[4] = {s, c, -s, -c};
    for (int k = 0; k <= M; ++k) g[k] = cyc[k % 4];
    return compose<M>(g, a);
}

} // namespace hypspec
