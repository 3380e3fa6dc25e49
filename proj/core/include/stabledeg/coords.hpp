#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stabledeg {

// Coordinates of a point or line of D(n,K) in their fixed order (0-based):
//   0: u_1   1: u_11   2: u_12   3: u_21
//   then for i >= 2 a block of four: u_ii, u'_ii, u_i,i+1, u_i+1,i
enum class CoordClass {
  first,       // u_1
  diag,        // u_ii
  diag_prime,  // u'_ii, i >= 2
  upper,       // u_i,i+1
  lower,       // u_i+1,i
};

struct CoordLabel {
  CoordClass cls;
  std::size_t i;  // 1 for `first`

  friend bool operator==(const CoordLabel&, const CoordLabel&) = default;
};

inline constexpr std::size_t kNoCoord = static_cast<std::size_t>(-1);

CoordLabel coord_label(std::size_t index);
// kNoCoord for labels that are not stored (u'_11 aliases u_11; i = 0).
std::size_t coord_index(CoordClass cls, std::size_t i) noexcept;
// "1", "11", "12", "21", "22", "22'", "23", ...
std::string coord_name(std::size_t index);

// Incidence relation j (1 <= j < n):  l_j - p_j = l[a] * p[b], with a, b < j.
struct Relation {
  std::size_t a;
  std::size_t b;
};

// Entry j describes the relation whose left side is coordinate j; entry 0 is
// unused. Only the first n - 1 relations exist in D(n,K).
std::vector<Relation> incidence_relations(std::size_t n);

}  // namespace stabledeg
