#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stabledeg/poly_map.hpp"

namespace stabledeg {

// Text form of a PolyMap:
//
//   STABLEMAP v1
//   ring Z 256
//   dim 3
//   coord 1: 3*x1^2*x3 + 1*x2 + 5
//   coord 2: 0
//   ...
//
// Terms appear in canonical order; every coefficient is written, exponent 1
// is written without ^, a constant is a bare coefficient and the zero
// polynomial is `0`.
std::string to_stablemap(const PolyMap& f);

// Throws Error{parse_error} whose message starts with "line N:". Line numbers
// count from `first_line` so embedded blocks report file positions.
PolyMap parse_stablemap(std::string_view text, std::size_t first_line = 1);

// One polynomial in the coordinate syntax above.
std::string poly_to_string(const Poly& p);

}  // namespace stabledeg
