#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "hypspec/eisenstein2d.hpp"
#include "hypspec/errors.hpp"
#include "hypspec/geometry.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

// Constant-term algebra of the product E_a E_b.  The product's constant
// term has exactly four exponents with matched formal coefficients:
//   a+b -> 1,  1-a+b -> c_a,  a+1-b -> c_b,  2-a-b -> c_a c_b.

enum class CoeffTag { one, c_a, c_b, c_a_c_b };

inline std::string to_string(CoeffTag t) {
    switch (t) {
        case CoeffTag::one: return "1";
        case CoeffTag::c_a: return "c_a";
        case CoeffTag::c_b: return "c_b";
        case CoeffTag::c_a_c_b: return "c_a*c_b";
    }
    return "?";
}

struct ExponentTerm {
    CoeffTag tag;
    cplx exponent;
};

inline std::array<ExponentTerm, 4> product_constant_term(cplx a, cplx b) {
    return {ExponentTerm{CoeffTag::one, a + b},
            ExponentTerm{CoeffTag::c_a, 1.0 - a + b},
            ExponentTerm{CoeffTag::c_b, a + 1.0 - b},
            ExponentTerm{CoeffTag::c_a_c_b, 2.0 - a - b}};
}

// Terms with Re(exponent) > 1/2 must be cancelled by subtracting the
// matching Eisenstein series; Re = 1/2 exactly is a boundary case the
// recipe does not cover and is returned separately.
struct SingularSelection {
    std::vector<ExponentTerm> singular;
    std::vector<ExponentTerm> boundary;
};

template <typename Terms>
SingularSelection select_singular(const Terms& terms) {
    SingularSelection out;
    for (const ExponentTerm& t : terms) {
        if (t.exponent.real() > 0.5)
            out.singular.push_back(t);
        else if (t.exponent.real() == 0.5)
            out.boundary.push_back(t);
    }
    return out;
}

// Numeric scattering constants for the two base parameters; injected so
// the symbolic layer stays exact (the CLI fills them from constant_term
// or user flags).
struct ScatteringValues {
    cplx at_a;
    cplx at_b;
};

struct Subtraction {
    CoeffTag tag;
    cplx coefficient;
    cplx parameter;  // the Eisenstein parameter e of the subtracted E_e
};

struct RegularizedExpression {
    cplx a, b;
    std::vector<Subtraction> subtractions;
    std::vector<cplx> surviving_exponents;
    GrowthClass certificate;  // growth class of the worst surviving exponent
};

inline cplx coefficient_value(CoeffTag tag, const ScatteringValues& c) {
    switch (tag) {
        case CoeffTag::one: return 1.0;
        case CoeffTag::c_a: return c.at_a;
        case CoeffTag::c_b: return c.at_b;
        case CoeffTag::c_a_c_b: return c.at_a * c.at_b;
    }
    throw precondition_error("coefficient tag", "unknown tag");
}

// F = E_a E_b - sum over singular slots of coeff * E_e, with the
// certificate that every surviving constant-term exponent has Re < 1/2.
inline RegularizedExpression regularize(cplx a, cplx b,
                                        const ScatteringValues& c_values) {
    const auto terms = product_constant_term(a, b);
    const SingularSelection sel = select_singular(terms);
    if (!sel.boundary.empty())
        throw boundary_error(
            "singular exponent lands exactly on Re = 1/2 (slot " +
            to_string(sel.boundary.front().tag) + ")");

    RegularizedExpression out;
    out.a = a;
    out.b = b;
    for (const ExponentTerm& t : sel.singular) {
        // Subtracting E_e only works away from the Eisenstein pole disk.
        try {
            check_off_pole(t.exponent);
        } catch (const pole_error&) {
            throw pole_error("selected exponent hits the Eisenstein pole disk",
                             t.exponent);
        }
        out.subtractions.push_back(
            Subtraction{t.tag, coefficient_value(t.tag, c_values), t.exponent});
    }
    // Survivors: the non-singular product exponents plus the second
    // constant-term exponent 1 - e of every subtracted E_e.
    for (const ExponentTerm& t : terms)
        if (!(t.exponent.real() > 0.5))
            out.surviving_exponents.push_back(t.exponent);
    for (const Subtraction& s : out.subtractions)
        out.surviving_exponents.push_back(1.0 - s.parameter);

    double worst = -INFINITY;
    for (cplx e : out.surviving_exponents) worst = std::max(worst, e.real());
    out.certificate = classify_growth(worst);
    if (!out.certificate.is_square_integrable())
        throw error("internal: surviving exponent with Re >= 1/2 after "
                    "regularization");
    return out;
}

// Decay-exponent measurement of the realized (n = 2) expression: the
// constant term of F at each height y is the x-average of
// E_a E_b - sum coeff E_e over x in [0, 1]; sigma_hat is the fitted slope
// of log |c F| against log y.  square_integrable means sigma_hat < 1/2.
struct SurrogateReport {
    double sigma_hat;
    GrowthClass::Kind classification;
    bool conclusive;
    std::vector<double> heights;
    std::vector<double> constant_term_abs;
};

inline SurrogateReport verify_l2_surrogate(const RegularizedExpression& expr,
                                           const std::vector<double>& heights) {
    if (heights.size() < 4)
        throw precondition_error("need >= 4 heights",
                                 "got " + std::to_string(heights.size()));
    SurrogateReport rep;
    rep.heights = heights;
    std::vector<double> lx, ly;
    for (double y : heights) {
        cplx avg = integrate_gl(
            [&](double x) {
                cplx v = eisenstein_fourier(expr.a, x, y) *
                         eisenstein_fourier(expr.b, x, y);
                for (const Subtraction& s : expr.subtractions)
                    v -= s.coefficient * eisenstein_fourier(s.parameter, x, y);
                return v;
            },
            0.0, 1.0, 8);
        rep.constant_term_abs.push_back(std::abs(avg));
        if (std::abs(avg) < 1e-14) continue;  // below noise; skip from fit
        lx.push_back(std::log(y));
        ly.push_back(std::log(std::abs(avg)));
    }
    if (lx.size() < 3) {
        rep.sigma_hat = -INFINITY;
        rep.classification = GrowthClass::Kind::square_integrable;
        rep.conclusive = false;
        return rep;
    }
    rep.sigma_hat = fit_slope(lx, ly);
    rep.classification = classify_growth(rep.sigma_hat).classification;
    rep.conclusive = true;
    return rep;
}

// The same measurement for the bare product E_a E_b (no subtractions).
inline SurrogateReport unregularized_surrogate(cplx a, cplx b,
                                               const std::vector<double>& heights) {
    RegularizedExpression bare;
    bare.a = a;
    bare.b = b;
    bare.certificate = classify_growth((a + b).real());
    return verify_l2_surrogate(bare, heights);
}

} // namespace hypspec
