#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "varreg/moebius.hpp"

namespace varreg {

// Accepts "a+bi" with optional signs, decimal and exponent forms ("0.5",
// "-0.3+0.2i", "1e-3i", "-i"), and the two-element array form "[re,im]".
Complex parse_complex(std::string_view text);

// Comma-separated complex values; commas inside [re,im] pairs do not split.
// An empty string parses as the empty list.
std::vector<Complex> parse_complex_list(std::string_view text);

// 17 significant digits: round-trip safe for double precision and
// idempotent under parse/re-emit.
std::string format_double(double x);

} // namespace varreg
