#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace cmsep {

// All numeric output carries 9 significant digits.
inline std::string format_g9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// Round through the 9-digit text form so JSON and text outputs carry
// bit-identical numbers.
inline double round_g9(double x) {
    return std::strtod(format_g9(x).c_str(), nullptr);
}

} // namespace cmsep
