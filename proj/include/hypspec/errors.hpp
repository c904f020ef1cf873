#pragma once

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace hypspec {

using cplx = std::complex<double>;

namespace detail {
inline std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}
} // namespace detail

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated.  `what()` names the
// violated precondition so callers (and the CLI) can report it.
struct precondition_error : error {
    precondition_error(std::string precondition, std::string detail)
        : error(precondition + ": " + detail),
          precondition(std::move(precondition)) {}
    std::string precondition;
};

struct domain_error : precondition_error {
    using precondition_error::precondition_error;
};

// Evaluation hit (or came too close to) a pole.  Carries the offending
// argument so contour code can route around it.
struct pole_error : error {
    pole_error(std::string where, std::complex<double> argument)
        : error(where + " (offending argument " + detail::num_str(argument.real()) +
                (argument.imag() < 0 ? "-" : "+") +
                detail::num_str(std::abs(argument.imag())) + "i)"),
          argument(argument) {}
    std::complex<double> argument;
};

// Quadrature failed to meet its tolerance.  Carries the error estimate.
struct quadrature_error : error {
    quadrature_error(std::string what, double estimate, double tolerance)
        : error(what + " (estimate " + detail::num_str(estimate) + ", tolerance " +
                detail::num_str(tolerance) + ")"),
          estimate(estimate), tolerance(tolerance) {}
    double estimate;
    double tolerance;
};

// lambda sits too close to the discretized spectral set.
struct conditioning_error : error {
    conditioning_error(std::string what, double distance, double required)
        : error(what + " (distance " + detail::num_str(distance) + ", required " +
                detail::num_str(required) + ")"),
          distance(distance), required(required) {}
    double distance;
    double required;
};

// A singular exponent landed exactly on the Re = 1/2 boundary, where the
// regularization recipe is undefined.
struct boundary_error : error {
    using error::error;
};

} // namespace hypspec
