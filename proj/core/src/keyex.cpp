#include "stabledeg/keyex.hpp"

#include <openssl/evp.h>

#include <sstream>

#include "stabledeg/error.hpp"
#include "stabledeg/stablemap.hpp"

namespace stabledeg {

namespace {

AffineMap make_tau(TauStyle style, const Ring& ring, std::size_t n, Rng& rng) {
  switch (style) {
    case TauStyle::first_row: return AffineMap::random_first_row(ring, n, rng);
    case TauStyle::monomial: return AffineMap::random_monomial(ring, n, rng);
    case TauStyle::dense: return AffineMap::random_dense(ring, n, rng);
  }
  return AffineMap::identity(ring, n);
}

// Symbolic map of the walk h, g^k, h^{-1}.
PolyMap conjugated_walk(const PrivateSeed& s, std::uint64_t k) {
  if (s.family == WalkFamily::flag) {
    const FlagGraph dd(s.ring, s.n - 1, true);
    ZWalk w(s.h_flag);
    for (std::uint64_t i = 0; i < k; ++i) w.insert(w.end(), s.g_flag.begin(), s.g_flag.end());
    const ZWalk h_inv = inverse_zwalk(s.h_flag, s.ring);
    w.insert(w.end(), h_inv.begin(), h_inv.end());
    return dd.zwalk_symbolic(w);
  }
  const GraphD d(s.ring, s.n);
  DWalk w(s.h_graph);
  for (std::uint64_t i = 0; i < k; ++i) w.insert(w.end(), s.g_graph.begin(), s.g_graph.end());
  const DWalk h_inv = inverse_walk(s.h_graph, s.ring);
  w.insert(w.end(), h_inv.begin(), h_inv.end());
  return d.walk_symbolic(w);
}

PolyMap conjugate_by_tau(const PrivateSeed& s, const PolyMap& w) {
  return compose(s.tau.inverse().to_map(), compose(w, s.tau.to_map()));
}

void check_exponent(std::uint64_t k) {
  if (k < 1 || k > kMaxExponentKey) {
    throw Error(Errc::invalid_argument,
                "exponent " + std::to_string(k) + " outside [1, 2^20]");
  }
}

}  // namespace

PrivateSeed make_secret(const SecretParams& params, std::uint64_t seed) {
  if (!params.ring.has_enough_regular()) {
    throw Error(Errc::insufficient_regular_elements,
                "ring " + params.ring.tag() + " needs at least 3 regular elements");
  }
  if (params.n < 2) throw Error(Errc::dimension_too_small, "key exchange needs dimension >= 2");
  Rng rng(seed);
  PrivateSeed s{params.ring, params.n, params.family, {}, {}, {}, {},
                AffineMap::identity(params.ring, params.n), seed};
  if (params.family == WalkFamily::flag) {
    s.g_flag = random_zwalk(params.ring, params.g_length, rng);
    s.h_flag = random_zwalk(params.ring, params.h_length, rng);
  } else {
    s.g_graph = random_walk(params.ring, 2 * params.g_length, rng);
    s.h_graph = random_walk(params.ring, 2 * params.h_length, rng);
  }
  s.tau = make_tau(params.tau, params.ring, params.n, rng);
  return s;
}

PolyMap make_base(const PrivateSeed& secret) { return alice_power(secret, 1); }

PolyMap alice_power(const PrivateSeed& secret, std::uint64_t k) {
  check_exponent(k);
  return conjugate_by_tau(secret, conjugated_walk(secret, k));
}

PolyMap bob_power(const PolyMap& b, std::uint64_t k) {
  check_exponent(k);
  auto check = [](const PolyMap& f) {
    if (f.degree() > 3) {
      throw Error(Errc::stability_violation,
                  "intermediate power has degree " + std::to_string(f.degree()));
    }
  };
  check(b);
  return power(b, k, check);
}

Transcript run_exchange(const PrivateSeed& secret, std::uint64_t n_a, std::uint64_t n_b,
                        std::span<const RingElem> v) {
  check_exponent(n_a);
  check_exponent(n_b);
  if (n_a * n_b > kMaxExponentKey) {
    throw Error(Errc::invalid_argument, "n_A * n_B exceeds 2^20");
  }
  if (v.size() != secret.n) {
    throw Error(Errc::dimension_mismatch, "public vector has length " + std::to_string(v.size()) +
                                              ", maps have dimension " +
                                              std::to_string(secret.n));
  }
  PolyMap base = make_base(secret);
  PolyMap c_a = alice_power(secret, n_a);
  PolyMap c_b = bob_power(base, n_b);
  PolyMap alice_collision = alice_power(secret, n_a * n_b);
  PolyMap bob_collision = bob_power(c_a, n_b);
  if (!(alice_collision == bob_collision)) {
    throw Error(Errc::collision_mismatch, "collision maps differ formally");
  }
  std::vector<RingElem> alice_shared = alice_collision.eval(v);
  std::vector<RingElem> bob_shared = bob_collision.eval(v);
  if (alice_shared != bob_shared) {
    throw Error(Errc::collision_mismatch, "collision vectors differ");
  }
  return Transcript{std::move(base), std::move(c_a), std::move(c_b), std::move(alice_collision),
                    std::vector<RingElem>(v.begin(), v.end()), std::move(alice_shared)};
}

std::string shared_digest(std::span<const RingElem> shared) {
  const std::string text = join_residues(shared);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::invalid_argument, "SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string to_text(const Transcript& t) {
  std::ostringstream os;
  os << "TRANSCRIPT v1\n"
     << "ring " << t.base.ring().tag() << '\n'
     << "dim " << t.base.dim() << '\n'
     << "v " << join_residues(t.v) << '\n'
     << "shared-digest " << shared_digest(t.shared) << '\n'
     << "map b\n" << to_stablemap(t.base)
     << "map c_A\n" << to_stablemap(t.c_a)
     << "map c_B\n" << to_stablemap(t.c_b);
  return os.str();
}

std::string secret_to_text(const PrivateSeed& s) {
  std::ostringstream os;
  os << "SECRET v1\n"
     << "ring " << s.ring.tag() << '\n'
     << "dim " << s.n << '\n'
     << "family " << (s.family == WalkFamily::flag ? "flag" : "graph") << '\n';
  if (s.family == WalkFamily::flag) {
    os << "g " << zwalk_to_string(s.g_flag) << '\n' << "h " << zwalk_to_string(s.h_flag) << '\n';
  } else {
    os << "g " << walk_to_string(s.g_graph) << '\n' << "h " << walk_to_string(s.h_graph) << '\n';
  }
  os << "tau-matrix";
  for (std::size_t i = 0; i < s.n; ++i) {
    os << (i == 0 ? " " : ";");
    for (std::size_t j = 0; j < s.n; ++j) os << (j == 0 ? "" : ",") << s.tau.at(i, j).value;
  }
  os << '\n' << "tau-shift " << join_residues(s.tau.shift()) << '\n' << "seed " << s.seed << '\n';
  return os.str();
}

}  // namespace stabledeg
