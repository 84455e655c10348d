#pragma once

#include <string>

namespace polariton {

// Fixed 12-significant-digit scientific notation ("%.11e"), locale-free,
// with negative zero normalized to "0.00000000000e+00". All machine-readable
// output goes through this so runs are byte-identical.
std::string sci12(double v);

// sci12 for finite values, "null" otherwise (JSON-lines convention).
std::string json_number(double v);

} // namespace polariton
