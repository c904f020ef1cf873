#include <catch2/catch.hpp>

#include "hypspec/spherical.hpp"
#include "test_support.hpp"

using namespace hypspec;

TEST_CASE("psi normalized to 1 at the basepoint") {
    for (int n : {2, 3, 4, 5})
        for (const cplx s : {cplx(0.5, 1.0), cplx(1.7, 0.0), cplx(0.3, -2.0)})
            CHECK(psi(SpectralParameter(s, n), 0.0) == cplx(1.0, 0.0));
}

TEST_CASE("psi parameter symmetry s <-> 1-s") {
    for (int n : {2, 3, 5})
        for (const cplx s : {cplx(0.8, 0.4), cplx(1.3, -1.1), cplx(0.5, 2.0)})
            for (double t : {0.2, 1.0, 4.0}) {
                const cplx a = psi(SpectralParameter(s, n), t);
                const cplx b = psi(SpectralParameter(1.0 - s, n), t);
                CHECK(std::abs(a - b) < 1e-9);
            }
}

TEST_CASE("psi n=3 closed form") {
    // psi_{1/2+i tau}(t) = sin(2 tau t) / (2 tau sinh t)
    for (double tau : {0.7, 2.0, 5.0})
        for (double t : {0.3, 1.0, 3.0, 8.0}) {
            const cplx v = psi(SpectralParameter(cplx(0.5, tau), 3), t);
            const double closed = std::sin(2 * tau * t) / (2 * tau * std::sinh(t));
            CHECK(std::abs(v - closed) < 1e-12);
        }
}

TEST_CASE("psi against the radial ODE oracle") {
    // n = 2, s = 1/2: real positive decaying solution
    {
        const SpectralParameter p(cplx(0.5, 0.0), 2);
        for (double t : {0.5, 1.5, 3.0}) {
            const cplx lib = psi(p, t);
            const cplx ode = oracle::spherical_ode(p.lambda(), 2, t);
            CHECK(lib.real() > 0.0);
            CHECK(std::abs(lib - ode) < 1e-8);
        }
        // e^{-t/2}-scale decay with a linear factor: check the decay rate
        const double r =
            std::abs(psi(p, 8.0)) / std::abs(psi(p, 4.0));
        CHECK(r < std::exp(-0.5 * 4.0) * (1 + 8.0));  // slower than e^{-t/2} only
        CHECK(r > std::exp(-0.5 * 4.0));
    }
    // n = 3, s = 1/2 + i at t = 1
    {
        const SpectralParameter p(cplx(0.5, 1.0), 3);
        const cplx lib = psi(p, 1.0);
        const cplx ode = oracle::spherical_ode(p.lambda(), 3, 1.0);
        CHECK(std::abs(lib - ode) < 1e-8);
    }
    // generic complex s off the critical line
    {
        const SpectralParameter p(cplx(0.8, 0.6), 2);
        const cplx lib = psi(p, 2.0);
        const cplx ode = oracle::spherical_ode(p.lambda(), 2, 2.0);
        CHECK(std::abs(lib - ode) < 1e-8);
    }
}

TEST_CASE("psi eigenfunction property via kernel derivatives") {
    for (int n : {2, 3}) {
        const SpectralParameter p(cplx(0.5, 1.3), n);
        const cplx lam = p.lambda();
        double worst = 0.0;
        for (double t : {0.1, 0.7, 2.0, 6.0, 10.0}) {
            const PsiJet j = psi_jet(p, t);
            const cplx lap = j.d2 + (n - 1.0) * (std::cosh(t) / std::sinh(t)) * j.d1;
            worst = std::max(worst, std::abs(lap - lam * j.value));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("psi quadrature failure carries the estimate") {
    try {
        psi(SpectralParameter(cplx(0.5, 3.0), 3), 5.0, true, 1e-18);
        FAIL("expected quadrature_error");
    } catch (const quadrature_error& e) {
        CHECK(e.tolerance == 1e-18);
        CHECK(e.estimate >= 0.0);
    }
    CHECK_THROWS_AS(psi(SpectralParameter(cplx(0.5, 1.0), 2), -1.0),
                    precondition_error);
}

TEST_CASE("radial laplacian closed forms") {
    // constant function maps to zero
    RadialFunction one = RadialFunction::from_rule(
        [](double) { return cplx(1.0, 0.0); }, 3, 10.0);
    for (double t : {0.0, 0.5, 2.0})
        CHECK(std::abs(radial_laplacian_at(one, t)) < 1e-9);

    // Delta cosh t = cosh t + (n-1) coth t sinh t = n cosh t
    for (int n : {2, 4}) {
        RadialFunction ch = RadialFunction::from_rule(
            [](double t) { return cplx(std::cosh(t), 0.0); }, n, 10.0);
        ch.d1 = [](double t) { return cplx(std::sinh(t), 0.0); };
        ch.d2 = [](double t) { return cplx(std::cosh(t), 0.0); };
        for (double t : {0.3, 1.0, 2.5})
            CHECK(radial_laplacian_at(ch, t).real() ==
                  Approx(n * std::cosh(t)).epsilon(1e-12));
        // finite-difference path agrees
        RadialFunction ch_fd = RadialFunction::from_rule(
            [](double t) { return cplx(std::cosh(t), 0.0); }, n, 10.0);
        CHECK(radial_laplacian_at(ch_fd, 1.0).real() ==
              Approx(n * std::cosh(1.0)).epsilon(1e-8));
    }
}

TEST_CASE("radial laplacian on samples") {
    // psi eigenfunction residual at second order on a sampled grid
    const int n = 2;
    const SpectralParameter p(cplx(0.5, 1.0), n);
    std::vector<double> ts;
    std::vector<cplx> vals;
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.5 + 2.0 * i / 400.0;
        ts.push_back(t);
        vals.push_back(psi(p, t, false));
    }
    RadialFunction f = RadialFunction::from_samples(ts, vals, n);
    RadialFunction lap = radial_laplacian(f);
    const cplx lam = p.lambda();
    double worst = 0.0;
    for (size_t i = 30; i + 30 < ts.size(); ++i)
        worst = std::max(worst, std::abs(lap.values[i] - lam * vals[i]));
    CHECK(worst < 1e-4);  // h = 5e-3 second-order stencil

    CHECK_THROWS_AS(radial_laplacian(RadialFunction::from_samples(
                        {0.0, 0.1, 0.2}, {1.0, 1.0, 1.0}, 2)),
                    precondition_error);
    CHECK_THROWS_AS(RadialFunction::from_samples({0.2, 0.1}, {1.0, 1.0}, 2),
                    precondition_error);
}

TEST_CASE("psi magnitude guard for large real parameters") {
    CHECK_THROWS_AS(psi(SpectralParameter(cplx(50.0, 0.0), 5), 20.0),
                    precondition_error);
}
