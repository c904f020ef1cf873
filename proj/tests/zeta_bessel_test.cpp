#include <catch2/catch.hpp>

#include <cmath>

#include "hypspec/bessel.hpp"
#include "hypspec/zetafn.hpp"

using namespace hypspec;

TEST_CASE("zeta classical and reference values") {
    CHECK(zeta(cplx(2, 0)).real() == Approx(M_PI * M_PI / 6).epsilon(1e-14));
    CHECK(zeta(cplx(4, 0)).real() == Approx(std::pow(M_PI, 4) / 90).epsilon(1e-14));
    CHECK(zeta(cplx(0, 0)).real() == Approx(-0.5).epsilon(1e-12));
    CHECK(zeta(cplx(-1, 0)).real() == Approx(-1.0 / 12).epsilon(1e-12));
    // frozen from mpmath
    const cplx z1 = zeta(cplx(0.5, 14.134725));
    CHECK(z1.real() == Approx(1.7674298413849039e-8).margin(1e-14));
    CHECK(z1.imag() == Approx(-1.1102028930923117e-7).margin(1e-14));
    const cplx z2 = zeta(cplx(-0.4, 3.0));
    CHECK(z2.real() == Approx(0.36955204029458558).epsilon(1e-12));
    CHECK(z2.imag() == Approx(0.0023193253116217145).epsilon(1e-9));
    CHECK_THROWS_AS(zeta(cplx(1, 0)), pole_error);
}

TEST_CASE("completed zeta functional equation") {
    for (const cplx s : {cplx(0.3, 2.0), cplx(2.2, -1.0), cplx(0.7, 5.0)}) {
        const cplx a = zeta_completed(s);
        const cplx b = zeta_completed(1.0 - s);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
    CHECK_THROWS_AS(zeta_completed(cplx(0, 0)), pole_error);
}

TEST_CASE("bessel k against the standard library for real order") {
    for (double nu : {0.0, 0.5, 1.3, 4.0})
        for (double x : {0.5, 2.0, 7.0}) {
            const double ref = std::cyl_bessel_k(nu, x);
            CHECK(bessel_k(cplx(nu, 0.0), x).real() == Approx(ref).epsilon(1e-12));
        }
}

TEST_CASE("bessel k complex order references") {
    // frozen from mpmath
    CHECK(bessel_k(cplx(0, 2.5), 3.0).real() ==
          Approx(0.013537393090514089).epsilon(1e-12));
    CHECK(std::abs(bessel_k(cplx(0, 2.5), 3.0).imag()) < 1e-15);
    const cplx v = bessel_k(cplx(1.3, -0.7), 2 * M_PI);
    CHECK(v.real() == Approx(0.00099301627315726695).epsilon(1e-11));
    CHECK(v.imag() == Approx(-0.00013428600411833417).epsilon(1e-11));
    // conjugation symmetry and the x > 0 precondition
    const cplx a = bessel_k(cplx(0.8, 1.1), 4.0);
    const cplx b = bessel_k(cplx(0.8, -1.1), 4.0);
    CHECK(std::abs(a - std::conj(b)) < 1e-15);
    CHECK_THROWS_AS(bessel_k(cplx(1, 0), 0.0), precondition_error);
}

TEST_CASE("scattering constant") {
    // frozen from mpmath: sqrt(pi) Gamma(s-1/2) zeta(2s-1) / (Gamma(s) zeta(2s))
    const cplx c2 = scattering_c(cplx(2, 0));
    CHECK(c2.real() == Approx(1.744568082131256).epsilon(1e-12));
    const cplx ch = scattering_c(cplx(0.5, 3.0));
    CHECK(ch.real() == Approx(0.81030753643965055).epsilon(1e-12));
    CHECK(ch.imag() == Approx(-0.58600486038010333).epsilon(1e-12));
    // unitary on the critical line
    for (double tau : {0.5, 1.7, 6.0})
        CHECK(std::abs(scattering_c(cplx(0.5, tau))) == Approx(1.0).epsilon(1e-12));
    // functional equation c_s c_{1-s} = 1
    for (const cplx s : {cplx(0.3, 1.0), cplx(0.75, 1.5), cplx(0.5, 2.0)})
        CHECK(std::abs(scattering_c(s) * scattering_c(1.0 - s) - 1.0) < 1e-12);
    // the s = 1/2 limit
    CHECK(scattering_c(cplx(0.5, 0.0)).real() == Approx(-1.0));
    CHECK_THROWS_AS(scattering_c(cplx(1.0, 0.0)), pole_error);
}
