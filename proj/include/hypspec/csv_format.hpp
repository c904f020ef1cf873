#pragma once

#include <cstdio>
#include <string>

namespace hypspec {

// Versioned CSV headers (mirrored in fixtures/csv_headers.json).
inline constexpr const char* csv_header_cfun = "tau,c_re,c_im,density";
inline constexpr const char* csv_header_radial = "t,value_re,value_im";
inline constexpr const char* csv_header_transform = "tau,value_re,value_im";
inline constexpr const char* csv_header_fundamental = "t,u_re,u_im";
inline constexpr const char* csv_header_eisenstein = "x,y,e_re,e_im";
inline constexpr const char* csv_header_constant_term =
    "s_re,s_im,leading_re,leading_im,c_re,c_im,residual";

// Deterministic shortest-roundtrip formatting for output files.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace hypspec
