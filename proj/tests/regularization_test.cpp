#include <catch2/catch.hpp>

#include <algorithm>

#include "hypspec/regularization.hpp"

using namespace hypspec;

TEST_CASE("product constant term has the four matched slots") {
    const cplx a(0.9, 1.2), b(0.4, -0.7);
    const auto terms = product_constant_term(a, b);
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].tag == CoeffTag::one);
    CHECK(std::abs(terms[0].exponent - (a + b)) < 1e-15);
    CHECK(terms[1].tag == CoeffTag::c_a);
    CHECK(std::abs(terms[1].exponent - (1.0 - a + b)) < 1e-15);
    CHECK(terms[2].tag == CoeffTag::c_b);
    CHECK(std::abs(terms[2].exponent - (a + 1.0 - b)) < 1e-15);
    CHECK(terms[3].tag == CoeffTag::c_a_c_b);
    CHECK(std::abs(terms[3].exponent - (2.0 - a - b)) < 1e-15);
}

TEST_CASE("a = b collapses the middle exponents to 1") {
    const cplx a(0.35, 1.1);
    const auto terms = product_constant_term(a, a);
    CHECK(std::abs(terms[0].exponent - 2.0 * a) < 1e-15);
    CHECK(std::abs(terms[1].exponent - 1.0) < 1e-15);
    CHECK(std::abs(terms[2].exponent - 1.0) < 1e-15);
    CHECK(terms[1].tag == CoeffTag::c_a);
    CHECK(terms[2].tag == CoeffTag::c_b);  // distinct slots, equal exponents
    CHECK(std::abs(terms[3].exponent - (2.0 - 2.0 * a)) < 1e-15);
}

TEST_CASE("critical-line parameters put every exponent on Re = 1") {
    const auto terms = product_constant_term(cplx(0.5, 2.2), cplx(0.5, -0.9));
    for (const auto& t : terms) CHECK(t.exponent.real() == Approx(1.0));
}

TEST_CASE("singular selection against a brute-force threshold sweep") {
    auto brute = [](const std::array<ExponentTerm, 4>& terms) {
        std::vector<CoeffTag> sel;
        for (const auto& t : terms)
            if (t.exponent.real() > 0.5) sel.push_back(t.tag);
        return sel;
    };
    for (const auto& [a, b] : std::vector<std::pair<cplx, cplx>>{
             {{1.2, 0.0}, {0.5, 3.0}},
             {{0.5, 2.0}, {0.5, 3.0}},
             {{0.2, 1.0}, {0.2, -0.5}},
             {{0.9, 0.3}, {0.8, 0.0}}}) {
        const auto terms = product_constant_term(a, b);
        const auto sel = select_singular(terms);
        const auto expected = brute(terms);
        REQUIRE(sel.singular.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i)
            CHECK(sel.singular[i].tag == expected[i]);
        CHECK(sel.boundary.empty());
    }

    // the three pinned configurations
    const auto s1 = select_singular(product_constant_term({1.2, 0.0}, {0.5, 3.0}));
    REQUIRE(s1.singular.size() == 2);
    CHECK(s1.singular[0].tag == CoeffTag::one);
    CHECK(s1.singular[1].tag == CoeffTag::c_b);

    const auto s2 = select_singular(product_constant_term({0.5, 2.0}, {0.5, 3.0}));
    CHECK(s2.singular.size() == 4);

    const auto s3 = select_singular(product_constant_term({0.2, 1.0}, {0.2, -0.5}));
    CHECK(s3.singular.size() == 3);  // 1-a+b, a+1-b (Re 1) and 2-a-b (Re 1.6)

    // boundary case goes to the separate list
    const auto sb = select_singular(product_constant_term({0.25, 1.0}, {0.25, 0.3}));
    CHECK(sb.boundary.size() == 1);
    CHECK(sb.boundary[0].tag == CoeffTag::one);
}

TEST_CASE("regularize reproduces the two paper cases") {
    {
        const cplx a(1.2, 0.0), b(0.5, 3.0);
        const auto reg =
            regularize(a, b, ScatteringValues{scattering_c(a), scattering_c(b)});
        REQUIRE(reg.subtractions.size() == 2);
        CHECK(reg.subtractions[0].tag == CoeffTag::one);
        CHECK(std::abs(reg.subtractions[0].coefficient - 1.0) < 1e-15);
        CHECK(std::abs(reg.subtractions[0].parameter - (a + b)) < 1e-15);
        CHECK(reg.subtractions[1].tag == CoeffTag::c_b);
        CHECK(std::abs(reg.subtractions[1].coefficient - scattering_c(b)) < 1e-15);
        CHECK(std::abs(reg.subtractions[1].parameter - (a + 1.0 - b)) < 1e-15);
    }
    {
        const auto reg = regularize(cplx(0.5, 2.0), cplx(0.5, 3.0),
                                    ScatteringValues{cplx(0, 1), cplx(0, -1)});
        REQUIRE(reg.subtractions.size() == 4);
        // slot-coefficient bijection: {1, c_a, c_b, c_a c_b}
        CHECK(reg.subtractions[0].tag == CoeffTag::one);
        CHECK(reg.subtractions[1].tag == CoeffTag::c_a);
        CHECK(reg.subtractions[2].tag == CoeffTag::c_b);
        CHECK(reg.subtractions[3].tag == CoeffTag::c_a_c_b);
        CHECK(std::abs(reg.subtractions[3].coefficient - cplx(0, 1) * cplx(0, -1)) <
              1e-15);
    }
    {
        const auto reg = regularize(cplx(0.2, 1.0), cplx(0.2, -0.5),
                                    ScatteringValues{cplx(1, 0), cplx(1, 0)});
        CHECK(reg.subtractions.size() == 3);
    }
}

TEST_CASE("surviving exponents certify square integrability") {
    const cplx a(1.2, 0.0), b(0.5, 3.0);
    const auto reg =
        regularize(a, b, ScatteringValues{scattering_c(a), scattering_c(b)});
    // independently recompute the survivors: non-singular product slots plus
    // the mirror 1-e of every subtracted slot
    std::vector<cplx> expected;
    for (const auto& t : product_constant_term(a, b))
        if (!(t.exponent.real() > 0.5)) expected.push_back(t.exponent);
    for (const auto& sub : reg.subtractions) expected.push_back(1.0 - sub.parameter);
    REQUIRE(reg.surviving_exponents.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(reg.surviving_exponents[i] - expected[i]) < 1e-15);
        CHECK(reg.surviving_exponents[i].real() < 0.5);
    }
    CHECK(reg.certificate.is_square_integrable());
    // pairing property: every subtracted exponent mirrors below 1/2
    for (const auto& sub : reg.subtractions) {
        CHECK(sub.parameter.real() > 0.5);
        CHECK((1.0 - sub.parameter).real() < 0.5);
    }
}

TEST_CASE("regularize symmetry under swapping a and b") {
    const cplx a(0.8, 1.5), b(0.35, -0.4);
    const ScatteringValues cab{cplx(2.0, 0.5), cplx(-1.0, 0.25)};
    const ScatteringValues cba{cab.at_b, cab.at_a};
    const auto r1 = regularize(a, b, cab);
    const auto r2 = regularize(b, a, cba);
    REQUIRE(r1.subtractions.size() == r2.subtractions.size());
    auto key = [](const Subtraction& s) {
        return std::pair<double, double>(s.parameter.real(), s.parameter.imag());
    };
    std::vector<std::pair<double, double>> k1, k2;
    for (const auto& s : r1.subtractions) k1.push_back(key(s));
    for (const auto& s : r2.subtractions) k2.push_back(key(s));
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    for (size_t i = 0; i < k1.size(); ++i) {
        CHECK(k1[i].first == Approx(k2[i].first).margin(1e-14));
        CHECK(k1[i].second == Approx(k2[i].second).margin(1e-14));
    }
    // coefficients correspond under c_a <-> c_b
    for (const auto& s1 : r1.subtractions)
        for (const auto& s2 : r2.subtractions)
            if (std::abs(s1.parameter - s2.parameter) < 1e-13)
                CHECK(std::abs(s1.coefficient - s2.coefficient) < 1e-13);
}

TEST_CASE("boundary and pole refusals") {
    CHECK_THROWS_AS(regularize(cplx(0.25, 1.0), cplx(0.25, 0.3),
                               ScatteringValues{cplx(1, 0), cplx(1, 0)}),
                    boundary_error);
    // a + b inside the Eisenstein pole disk
    CHECK_THROWS_AS(regularize(cplx(0.7, 0.0), cplx(0.305, 0.0),
                               ScatteringValues{cplx(1, 0), cplx(1, 0)}),
                    pole_error);
}

TEST_CASE("l2 surrogate separates regularized from unregularized") {
    const cplx a(1.25, 0.0), b(0.5, 0.9);
    const auto reg =
        regularize(a, b, ScatteringValues{scattering_c(a), scattering_c(b)});
    const double lyc = (std::arg(scattering_c(b)) / 2.0 + M_PI) / b.imag();
    std::vector<double> hs;
    for (int i = 0; i < 8; ++i) hs.push_back(std::exp(lyc - 0.5 + 1.0 * i / 7.0));

    const auto rep = verify_l2_surrogate(reg, hs);
    CHECK(rep.conclusive);
    CHECK(rep.sigma_hat < 0.5);
    CHECK(rep.classification == GrowthClass::Kind::square_integrable);

    const auto rep_un = unregularized_surrogate(a, b, hs);
    CHECK(rep_un.conclusive);
    CHECK(rep_un.sigma_hat > 0.5);

    CHECK_THROWS_AS(verify_l2_surrogate(reg, {2.0, 3.0}), precondition_error);
}
