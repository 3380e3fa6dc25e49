#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stabledeg/affine.hpp"
#include "stabledeg/flag_dd.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/poly_map.hpp"

namespace stabledeg {

// Which group the secret walks live in. `flag` uses Z-walks of the restricted
// flag graph DD(n-1,K), whose maps act on K^n; `graph` uses point-to-point
// walks of D(n,K).
enum class WalkFamily { flag, graph };

enum class TauStyle { first_row, monomial, dense };

// Exponents larger than this are rejected.
inline constexpr std::uint64_t kMaxExponentKey = std::uint64_t{1} << 20;

struct SecretParams {
  std::size_t n = 8;  // map dimension
  Ring ring = Ring::make(RingKind::residue_ring, 65536);
  WalkFamily family = WalkFamily::flag;
  std::size_t g_length = 4;  // Z-steps, or colour pairs for `graph`
  std::size_t h_length = 2;
  TauStyle tau = TauStyle::first_row;
};

// Alice's secret: g, the conjugator h and the affine tau.
struct PrivateSeed {
  Ring ring;
  std::size_t n;
  WalkFamily family;
  ZWalk g_flag, h_flag;
  DWalk g_graph, h_graph;
  AffineMap tau;
  std::uint64_t seed;
};

// Throws Error{insufficient_regular_elements} when |Reg(K)| < 3 and
// Error{dimension_too_small} for n < 2.
PrivateSeed make_secret(const SecretParams& params, std::uint64_t seed);

// b = tau^{-1} o W o tau, where W walks h, then g, then h^{-1}.
PolyMap make_base(const PrivateSeed& secret);

// b^k, obtained by walking h, g repeated k times, h^{-1}, then conjugating
// once by tau.
PolyMap alice_power(const PrivateSeed& secret, std::uint64_t k);

// b^k by square-and-multiply composition. Throws Error{stability_violation}
// as soon as an intermediate power has degree above 3.
PolyMap bob_power(const PolyMap& b, std::uint64_t k);

struct Transcript {
  PolyMap base;
  PolyMap c_a;
  PolyMap c_b;
  PolyMap collision;
  std::vector<RingElem> v;
  std::vector<RingElem> shared;
};

// Runs both sides. Alice's collision is alice_power(n_a * n_b) and Bob's is
// bob_power(c_a, n_b); throws Error{collision_mismatch} if they differ as
// polynomial maps or at v.
Transcript run_exchange(const PrivateSeed& secret, std::uint64_t n_a, std::uint64_t n_b,
                        std::span<const RingElem> v);

// SHA-256 of the comma-separated shared vector, lowercase hex.
std::string shared_digest(std::span<const RingElem> shared);

// TRANSCRIPT v1 text: header lines then STABLEMAP blocks for b, c_A, c_B.
// Never contains secret material.
std::string to_text(const Transcript& t);

// Secret material in a line-oriented form, for explicit export only.
std::string secret_to_text(const PrivateSeed& secret);

}  // namespace stabledeg
