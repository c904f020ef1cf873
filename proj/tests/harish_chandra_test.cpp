#include <catch2/catch.hpp>

#include "hypspec/harish_chandra.hpp"

using namespace hypspec;

TEST_CASE("c-function trivial normalization c(1) = 1") {
    for (int n = 2; n <= 6; ++n)
        CHECK(std::abs(c_function(cplx(1.0, 0.0), n) - 1.0) < 1e-13);
}

TEST_CASE("c-function n=3 closed form 1/(2s-1)") {
    // 100-point grid avoiding s = 1/2
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const cplx s(0.6 + 0.27 * i, -4.0 + 0.9 * j);
            const cplx closed = 1.0 / (2.0 * s - 1.0);
            worst = std::max(worst,
                             std::abs(c_function(s, 3) - closed) / std::abs(closed));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("c-function reference values at large tau") {
    struct Ref { int n; double tau, re, im; };
    // frozen from mpmath
    const Ref refs[] = {
        {2, 100.0, 0.033714307777854986, -0.033883304978741152},
        {2, 9999.5, 0.0033798911961110315, -0.0033800602033466966},
        {3, 9999.5, -3.1604203104588513e-37, -5.000250012500625e-5},
        {5, 9999.5, -5.0005000249999999e-9, -2.5003750312515625e-13},
    };
    for (const Ref& r : refs) {
        const cplx v = c_function(SpectralParameter::critical_line(r.tau, r.n));
        CHECK(std::abs(v - cplx(r.re, r.im)) <= 1e-12 * std::abs(v));
    }
}

TEST_CASE("c-function conjugate symmetry") {
    for (int n : {2, 3, 4})
        for (const cplx s : {cplx(0.8, 1.5), cplx(0.5, 7.0), cplx(2.0, -3.0)}) {
            const cplx a = c_function(s, n);
            const cplx b = c_function(std::conj(s), n);
            CHECK(std::abs(a - std::conj(b)) <= 1e-13 * std::abs(a));
        }
}

TEST_CASE("c-function poles and cancellations") {
    // n = 3: simultaneous numerator/denominator poles cancel to the
    // closed-form values 1/(2s-1)
    CHECK(c_function(cplx(-0.5, 0), 3).real() == Approx(-0.5));
    CHECK(c_function(cplx(-1.5, 0), 3).real() == Approx(-0.25));
    // n = 2: numerator pole without a matching denominator pole
    CHECK_THROWS_AS(c_function(cplx(-3.5, 0), 2), pole_error);
    try {
        c_function(cplx(-3.5, 0), 2);
    } catch (const pole_error& e) {
        CHECK(e.argument.real() == Approx(-2.0));  // (s - 1/2)(n-1)/2
    }
    // denominator pole kills the quotient
    CHECK(std::abs(c_function(cplx(-2.5, 0), 2)) == 0.0);
}

TEST_CASE("plancherel density on the critical line") {
    // |c|^2 = 1/(4 tau^2) for n = 3
    CHECK(plancherel_density(1.0, 3) == Approx(4.0).epsilon(1e-12));
    CHECK(plancherel_density(0.5, 3) == Approx(1.0).epsilon(1e-12));
    CHECK(plancherel_density(2.5, 3) == Approx(plancherel_density(-2.5, 3)));
    CHECK_THROWS_AS(plancherel_density(0.0, 3), pole_error);
    CHECK_THROWS_AS(plancherel_density(SpectralParameter(cplx(0.6, 1.0), 3)),
                    precondition_error);
    // n = 2 growth ~ tau^{n-1}: density ratio over a decade approaches 10
    const double r = plancherel_density(3000.0, 2) / plancherel_density(300.0, 2);
    CHECK(r == Approx(10.0).epsilon(0.01));
}

TEST_CASE("asymptotic exponent fit") {
    std::vector<double> grid;
    for (int i = 0; i < 24; ++i) grid.push_back(100.0 * std::pow(100.0, i / 23.0));
    CHECK(asymptotic_exponent_fit(2, grid) == Approx(-0.5).epsilon(0.02));
    CHECK(asymptotic_exponent_fit(3, grid) == Approx(-1.0).epsilon(0.02));
    CHECK(asymptotic_exponent_fit(5, grid) == Approx(-2.0).epsilon(0.02));

    CHECK_THROWS_AS(asymptotic_exponent_fit(2, {1.0, 2.0, 3.0}),
                    precondition_error);
    std::vector<double> narrow;
    for (int i = 0; i < 10; ++i) narrow.push_back(100.0 + i);
    CHECK_THROWS_AS(asymptotic_exponent_fit(2, narrow), precondition_error);
}

TEST_CASE("spectral parameter eigenvalue map") {
    CHECK(std::abs(lambda_of_s(SpectralParameter(cplx(0, 0), 4))) == 0.0);
    CHECK(std::abs(lambda_of_s(SpectralParameter(cplx(1, 0), 4))) == 0.0);
    const SpectralParameter p(cplx(0.5, 2.0), 2);
    CHECK(p.lambda().real() == Approx(-(0.25 + 4.0)));
    CHECK(p.lambda().imag() == Approx(0.0).margin(1e-15));
    // lambda_s = lambda_{1-s}
    for (const cplx s : {cplx(0.3, 1.2), cplx(2.0, -0.4)})
        CHECK(std::abs(SpectralParameter(s, 3).lambda() -
                       SpectralParameter(1.0 - s, 3).lambda()) < 1e-12);
    CHECK_THROWS_AS(SpectralParameter(cplx(1, 0), 1), precondition_error);
}
