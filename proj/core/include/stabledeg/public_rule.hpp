#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabledeg/affine.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/poly_map.hpp"

namespace stabledeg {

struct PrivateKey {
  AffineMap t1;
  DWalk walk;
  AffineMap t2;
};

struct PublicRule {
  PolyMap public_map;
  PrivateKey key;
};

enum class KeygenRoute {
  walk_from_t1,  // walk symbolically starting at the point T1(x)
  compose,       // build W from the identity, then compose with T1
};

// public = T2 o W o T1: T1 is applied first, then the point-to-point walk W
// of D(n,K), then T2. T1 has unit diagonal and a nonzero first row, T2 is the
// identity, both shifts are zero. Throws Error{invalid_argument} for an
// empty or odd-length walk.
// Both routes give the same map.
PublicRule make_public_rule(std::size_t n, const Ring& ring, DWalk walk, std::uint64_t seed,
                            KeygenRoute route = KeygenRoute::walk_from_t1);
// Same with a random non-backtracking walk of the given length.
PublicRule make_public_rule(std::size_t n, const Ring& ring, std::size_t walk_length,
                            std::uint64_t seed, KeygenRoute route = KeygenRoute::walk_from_t1);

std::vector<RingElem> encrypt(const PolyMap& public_map, std::span<const RingElem> x);
// Undoes T2, then the walk (reversed, colours negated), then T1.
std::vector<RingElem> decrypt(const PrivateKey& key, std::span<const RingElem> y);

// PRIVATE-KEY v1 text:
//   PRIVATE-KEY v1
//   ring Z 256
//   dim 3
//   walk 5,-2
//   t1 first_row        (or dense), then dim matrix rows and a shift line
//   1,4,2
//   ...
//   shift 0,0,0
//   t2 ...
std::string private_key_to_text(const PrivateKey& key);
// Throws Error{parse_error} with a "line N:" prefix.
PrivateKey parse_private_key(std::string_view text);

}  // namespace stabledeg
