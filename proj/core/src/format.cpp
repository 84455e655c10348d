#include "polariton/format.hpp"

#include <cmath>
#include <cstdio>

namespace polariton {

std::string sci12(double v) {
    if (v == 0.0) v = 0.0; // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return sci12(v);
}

} // namespace polariton
