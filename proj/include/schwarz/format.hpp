#pragma once

#include <cstdio>
#include <string>

namespace schwarz {

/// Shortest-safe round-trip formatting used for every number we print.
inline std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace schwarz
