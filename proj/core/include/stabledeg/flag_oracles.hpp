#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabledeg/flag_dd.hpp"
#include "stabledeg/poly_map.hpp"

namespace stabledeg {

struct StablePowerReport {
  std::vector<unsigned> degrees;  // degrees[k-1] = deg(g^k), k = 1..kmax
  std::vector<bool> identity;     // whether g^k is the identity map
  bool pass = false;              // every power has degree <= 3
};

// g, g^2, ..., g^kmax by repeated composition with g.
StablePowerReport stable_power_check(const PolyMap& g, std::size_t kmax);

struct OrderProbe {
  // Largest orbit length seen; when some orbit did not close within
  // max_iter steps this is max_iter + 1 and `capped` is set.
  std::uint64_t lower_bound = 0;
  bool capped = false;
  // lcm of all cycle lengths, when the whole domain (at most 10^6 vectors)
  // was enumerated and the lcm fits in 64 bits.
  std::optional<std::uint64_t> exact;
};

inline constexpr std::uint64_t kEnumerableDomain = 1'000'000;

OrderProbe order_probe(const PolyMap& g, std::span<const std::vector<RingElem>> samples,
                       std::uint64_t max_iter);

// Length of a shortest directed cycle in DD(n,K) with colours from Reg(K)
// (restricted) or from K \ {0}; 0 when acyclic. Throws Error{too_large}
// beyond 10^6 flags per side.
std::uint64_t dd_cycle_oracle(std::size_t n, const Ring& ring, bool restricted = true);

}  // namespace stabledeg
