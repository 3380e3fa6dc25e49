#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stabledeg/poly_map.hpp"

namespace testsupport {

// Coordinate labels of D(n,K) written out independently of the library:
// "1", "11", "12", "21", then "ii", "ii'", "i,i+1", "i+1,i" for i >= 2.
struct Label {
  enum Kind { first, diag, diag_prime, upper, lower } kind;
  std::size_t i;
};

std::vector<Label> labels(std::size_t n);

// Flag steps of DD(n,K) computed with the difference recurrences
//   moving the point along a fixed line:  dp_j = -l_a * dp_b
//   moving the line through a fixed point: dl_j = dl_a * p_b
// starting from the symbolic F1 flag (p_1..p_n, l_1). Both vertices are kept
// explicitly. The result uses the F1 / F2 encodings: after an odd number of
// steps (l_1..l_n, p_1), after an even number (p_1..p_n, l_1).
stabledeg::PolyMap recurrence_steps(const stabledeg::Ring& ring, std::size_t n,
                                    std::span<const stabledeg::RingElem> colours);

}  // namespace testsupport
