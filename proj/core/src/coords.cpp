#include "stabledeg/coords.hpp"

namespace stabledeg {

CoordLabel coord_label(std::size_t index) {
  switch (index) {
    case 0: return {CoordClass::first, 1};
    case 1: return {CoordClass::diag, 1};
    case 2: return {CoordClass::upper, 1};
    case 3: return {CoordClass::lower, 1};
    default: break;
  }
  const std::size_t i = (index - 4) / 4 + 2;
  switch ((index - 4) % 4) {
    case 0: return {CoordClass::diag, i};
    case 1: return {CoordClass::diag_prime, i};
    case 2: return {CoordClass::upper, i};
    default: return {CoordClass::lower, i};
  }
}

std::size_t coord_index(CoordClass cls, std::size_t i) noexcept {
  if (cls == CoordClass::first) return i == 1 ? 0 : kNoCoord;
  if (i == 0) return kNoCoord;
  if (i == 1) {
    switch (cls) {
      case CoordClass::diag: return 1;
      case CoordClass::upper: return 2;
      case CoordClass::lower: return 3;
      default: return kNoCoord;
    }
  }
  const std::size_t base = 4 + 4 * (i - 2);
  switch (cls) {
    case CoordClass::diag: return base;
    case CoordClass::diag_prime: return base + 1;
    case CoordClass::upper: return base + 2;
    case CoordClass::lower: return base + 3;
    default: return kNoCoord;
  }
}

std::string coord_name(std::size_t index) {
  const CoordLabel c = coord_label(index);
  const std::string i = std::to_string(c.i);
  switch (c.cls) {
    case CoordClass::first: return "1";
    case CoordClass::diag: return i + i;
    case CoordClass::diag_prime: return i + i + "'";
    case CoordClass::upper: return i + std::to_string(c.i + 1);
    case CoordClass::lower: return std::to_string(c.i + 1) + i;
  }
  return {};
}

std::vector<Relation> incidence_relations(std::size_t n) {
  std::vector<Relation> rel(n, Relation{0, 0});
  for (std::size_t j = 1; j < n; ++j) {
    const CoordLabel c = coord_label(j);
    const std::size_t i = c.i;
    switch (c.cls) {
      case CoordClass::diag:  // l_ii - p_ii = l_1 p_{i-1,i}
        rel[j] = {0, i == 1 ? 0 : coord_index(CoordClass::upper, i - 1)};
        break;
      case CoordClass::diag_prime:  // l'_ii - p'_ii = l_{i,i-1} p_1
        rel[j] = {coord_index(CoordClass::lower, i - 1), 0};
        break;
      case CoordClass::upper:  // l_{i,i+1} - p_{i,i+1} = l_ii p_1
        rel[j] = {coord_index(CoordClass::diag, i), 0};
        break;
      case CoordClass::lower:  // l_{i+1,i} - p_{i+1,i} = l_1 p'_ii
        rel[j] = {0, i == 1 ? coord_index(CoordClass::diag, 1)
                            : coord_index(CoordClass::diag_prime, i)};
        break;
      case CoordClass::first:
        break;
    }
  }
  return rel;
}

}  // namespace stabledeg
