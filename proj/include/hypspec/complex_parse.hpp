#pragma once

#include <cctype>
#include <complex>
#include <cstdlib>
#include <string>

#include "hypspec/errors.hpp"

namespace hypspec {

// Command-line complex grammar:  re | imi | re+imi | re-imi
// where re and im are ordinary floating-point literals and an omitted
// magnitude before 'i' means 1 (e.g. "i", "-i", "0.5+2i", "1e-3-0.25i").
inline std::complex<double> parse_complex(const std::string& text) {
    const char* p = text.c_str();
    auto fail = [&]() -> std::complex<double> {
        throw precondition_error("complex literal must match re[+-im]i",
                                 "got '" + text + "'");
    };
    auto read_number = [&](const char*& q, double& out) -> bool {
        char* end = nullptr;
        double v = std::strtod(q, &end);
        if (end == q) return false;
        q = end;
        out = v;
        return true;
    };

    while (std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (*p == '\0') return fail();

    // Pure imaginary with implicit magnitude: "i", "+i", "-i".
    if (*p == 'i' || ((*p == '+' || *p == '-') && *(p + 1) == 'i')) {
        double sign = (*p == '-') ? -1.0 : 1.0;
        p += (*p == 'i') ? 1 : 2;
        if (*p != '\0') return fail();
        return {0.0, sign};
    }

    double first = 0.0;
    if (!read_number(p, first)) return fail();
    if (*p == 'i') {
        ++p;
        if (*p != '\0') return fail();
        return {0.0, first};
    }
    if (*p == '\0') return {first, 0.0};

    if (*p != '+' && *p != '-') return fail();
    double im = 0.0;
    if (*(p + 1) == 'i') {
        im = (*p == '-') ? -1.0 : 1.0;
        p += 2;
    } else {
        if (!read_number(p, im)) return fail();
        if (*p != 'i') return fail();
        ++p;
    }
    if (*p != '\0') return fail();
    return {first, im};
}

inline std::string format_complex(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace hypspec
