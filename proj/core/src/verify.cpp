#include "stabledeg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "stabledeg/affine.hpp"
#include "stabledeg/bench.hpp"
#include "stabledeg/error.hpp"
#include "stabledeg/flag_dd.hpp"
#include "stabledeg/flag_oracles.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/graph_oracles.hpp"
#include "stabledeg/keyex.hpp"
#include "stabledeg/public_rule.hpp"
#include "stabledeg/stablemap.hpp"

namespace stabledeg {

namespace {

Ring F(std::uint64_t p) { return Ring::make(RingKind::prime_field, p); }
Ring Z(std::uint64_t m) { return Ring::make(RingKind::residue_ring, m); }

std::string graph_name(std::size_t k, const Ring& r) {
  return "D(" + std::to_string(k) + "," + r.tag() + ")";
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "" : "FAILED ") << what << "; ";
  }
};

// -- 1 ----------------------------------------------------------------------

void graph_facts(Outcome& out, Scale scale) {
  std::vector<std::pair<std::size_t, std::uint64_t>> cases{{2, 3}, {3, 3}, {2, 5}, {3, 5}};
  if (scale == Scale::smoke) cases = {{2, 3}, {2, 5}};
  for (auto [k, q] : cases) {
    const GraphFacts f = girth_and_regularity_oracle(k, F(q));
    std::uint64_t expect = 2;
    for (std::size_t i = 0; i < k; ++i) expect *= q;
    out.require(f.vertex_count == expect && f.bipartite && f.regular_degree == q,
                graph_name(k, F(q)) + ": " + std::to_string(f.vertex_count) + " vertices (want " +
                    std::to_string(expect) + "), bipartite=" + (f.bipartite ? "yes" : "no") +
                    ", degree " + std::to_string(f.regular_degree));
  }
}

// -- 2 ----------------------------------------------------------------------

void girth_bounds(Outcome& out, Scale scale) {
  struct Case {
    std::size_t k;
    std::uint64_t q, bound;
  };
  std::vector<Case> cases{{2, 3, 6}, {3, 3, 8}, {2, 5, 6}, {3, 5, 8}};
  if (scale == Scale::smoke) cases = {{2, 3, 6}, {3, 3, 8}};
  for (const Case& c : cases) {
    const GraphFacts f = girth_and_regularity_oracle(c.k, F(c.q));
    const bool ok = f.girth == 0 || f.girth >= c.bound;
    out.require(ok, graph_name(c.k, F(c.q)) + " girth " +
                        (f.girth == 0 ? std::string("inf") : std::to_string(f.girth)) +
                        " >= " + std::to_string(c.bound));
  }
}

// -- 3 ----------------------------------------------------------------------

void components(Outcome& out, Scale scale) {
  std::vector<std::size_t> ks{6, 7};
  if (scale == Scale::smoke) ks = {6};
  for (std::size_t k : ks) {
    const ComponentReport r = component_oracle(k, F(3));
    out.require(r.components_equal_fibers,
                graph_name(k, F(3)) + ": " + std::to_string(r.component_count) +
                    " components, " + std::to_string(r.fiber_count) + " fibers");
  }
  const ComponentReport r4 = component_oracle(6, Z(4));
  out.require(r4.split_fibers >= 1, graph_name(6, Z(4)) + ": " +
                                        std::to_string(r4.component_count) + " components, " +
                                        std::to_string(r4.fiber_count) + " fibers, " +
                                        std::to_string(r4.split_fibers) + " split");
}

// -- 4 ----------------------------------------------------------------------

void edge_invariance(Outcome& out, Scale scale, std::uint64_t seed) {
  std::vector<std::size_t> ks{6, 7};
  if (scale == Scale::smoke) ks = {6};
  for (std::size_t k : ks) {
    const GraphD g(F(3), k);
    const MaterializedGraph m(g);
    std::uint64_t edges = 0, bad = 0;
    for (std::size_t v = 0; v < m.half(); ++v) {
      const Vertex p = m.vertex(v);
      const auto a = g.invariant_vector(p);
      for (std::uint32_t w : m.neighbours(v)) {
        ++edges;
        if (g.invariant_vector(m.vertex(w)) != a) ++bad;
      }
    }
    out.require(bad == 0, graph_name(k, F(3)) + ": " + std::to_string(bad) + " violations over " +
                              std::to_string(edges) + " edges");
  }
  const Ring r = F(127);
  const GraphD g(r, 10);
  Rng rng(seed);
  const std::uint64_t samples = scale == Scale::full ? 10'000 : 1'000;
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vertex p = g.random_vertex(Side::point, rng);
    const Vertex l = g.apply_N(p, r.sample(rng));
    if (!g.incident(p, l) || g.invariant_vector(p) != g.invariant_vector(l)) ++bad;
  }
  out.require(bad == 0, graph_name(10, r) + ": " + std::to_string(bad) + " violations over " +
                            std::to_string(samples) + " random edges");
}

// -- 5 ----------------------------------------------------------------------

void inverse_identities(Outcome& out, Scale scale, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t vertices = scale == Scale::full ? 1000 : 100;
  const std::vector<std::pair<std::size_t, Ring>> graphs{{3, Z(5)}, {6, F(127)}, {10, Z(256)}};
  for (const auto& [n, r] : graphs) {
    const GraphD g(r, n);
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < vertices; ++i) {
      const Vertex v = g.random_vertex(i % 2 == 0 ? Side::point : Side::line, rng);
      const RingElem a = r.sample(rng), b = r.sample(rng);
      if (g.apply_X(g.apply_X(v, a, b), r.neg(b), r.neg(a)) != v) ++bad;
    }
    out.require(bad == 0, "X(a,b)X(-b,-a) on " + graph_name(n, r) + ": " + std::to_string(bad) +
                              "/" + std::to_string(vertices) + " violations");
  }

  const std::uint64_t pairs = scale == Scale::full ? 50 : 5;
  for (std::size_t n : {6u, 10u}) {
    for (const Ring& r : {F(127), Z(256)}) {
      const FlagGraph dd(r, n);
      std::uint64_t literal_bad = 0, inverse_bad = 0;
      for (std::uint64_t i = 0; i < pairs; ++i) {
        const RingElem a = r.sample_regular(rng), b = r.sample_regular(rng);
        const ZWalk w{{a, b}, {r.neg(a), r.neg(b)}};
        if (!dd.zwalk_symbolic(w).is_identity()) ++literal_bad;
        ZWalk round{{a, b}};
        const ZWalk inv = inverse_zwalk(round, r);
        round.insert(round.end(), inv.begin(), inv.end());
        if (!dd.zwalk_symbolic(round).is_identity()) ++inverse_bad;
      }
      const std::string where = "DD(" + std::to_string(n) + "," + r.tag() + ")";
      out.require(literal_bad == 0, "Z(a,b)Z(-a,-b) = id on " + where + ": " +
                                        std::to_string(literal_bad) + "/" + std::to_string(pairs) +
                                        " violations");
      out.detail << "(Z(a,b) followed by its inverse N_{0,-b}N_{-a,0}: " << inverse_bad << "/"
                 << pairs << " violations) ";
    }
  }
}

// -- 6 ----------------------------------------------------------------------

void stable_degree(Outcome& out, Scale scale, std::uint64_t seed) {
  std::vector<Ring> rings{Z(256), Z(65536), F(127)};
  std::vector<std::size_t> ns{8, 16, 32};
  std::size_t walks = 100;
  if (scale == Scale::smoke) {
    ns = {8, 16};
    walks = 12;
  }
  const std::size_t combos = rings.size() * ns.size();
  Rng rng(seed);
  std::uint64_t maps = 0, violations = 0;
  unsigned max_degree = 0;
  auto check = [&](const PolyMap& f) {
    const StablePowerReport rep = stable_power_check(f, 8);
    ++maps;
    for (unsigned d : rep.degrees) {
      max_degree = std::max(max_degree, d);
      if (d > 3) ++violations;
    }
  };
  auto conj = [](const AffineMap& tau, const PolyMap& g) {
    return compose(tau.inverse().to_map(), compose(g, tau.to_map()));
  };
  for (std::size_t i = 0; i < walks; ++i) {
    const Ring& r = rings[i % rings.size()];
    const std::size_t n = ns[(i / rings.size()) % ns.size()];
    const std::size_t len = 1 + i % 16;
    (void)combos;

    const FlagGraph dd(r, n - 1);
    const PolyMap z = dd.zwalk_symbolic(random_zwalk(r, len, rng));
    check(z);
    check(conj(AffineMap::random_first_row(r, n, rng), z));

    const GraphD g(r, n);
    const PolyMap d = g.walk_symbolic(random_walk(r, 2 * len, rng));
    check(d);
    check(conj(AffineMap::random_monomial(r, n, rng), d));
    if (n == 8) check(conj(AffineMap::random_first_row(r, n, rng), d));
  }
  out.require(violations == 0, std::to_string(walks) + " Z-walks and " + std::to_string(walks) +
                                   " D-walks, " + std::to_string(maps) +
                                   " maps (raw and conjugated) x 8 powers: " +
                                   std::to_string(violations) + " powers above degree 3, max degree " +
                                   std::to_string(max_degree));
}

// -- 7 ----------------------------------------------------------------------

void protocol(Outcome& out, Scale scale, std::uint64_t seed) {
  const std::vector<Ring> rings{Z(65536), F(127)};
  const std::vector<std::size_t> ns{8, 16};
  const std::size_t runs = scale == Scale::full ? 20 : 4;
  const std::uint64_t cap = scale == Scale::full ? 4096 : 64;
  Rng rng(seed);
  std::size_t ok = 0;
  std::ostringstream failures;
  for (std::size_t i = 0; i < runs; ++i) {
    SecretParams params;
    params.ring = rings[i % rings.size()];
    params.n = ns[(i / rings.size()) % ns.size()];
    params.g_length = 3;
    params.h_length = 2;
    const std::uint64_t n_a = 1 + rng.below(64);
    const std::uint64_t n_b = 1 + rng.below(cap / n_a);
    const PrivateSeed secret = make_secret(params, rng.next());
    std::vector<RingElem> v(params.n);
    for (auto& x : v) x = params.ring.sample(rng);
    try {
      const Transcript t = run_exchange(secret, n_a, n_b, v);
      if (t.collision.eval(v) == t.shared && t.collision.degree() <= 3) ++ok;
    } catch (const Error& e) {
      failures << " [" << e.what() << "]";
    }
  }
  out.require(ok == runs, std::to_string(ok) + "/" + std::to_string(runs) +
                              " exchanges with equal collisions" + failures.str());
}

// -- 8 ----------------------------------------------------------------------

void order_bounds(Outcome& out, Scale scale, std::uint64_t seed) {
  const Ring r = F(127);
  Rng rng(seed);
  const std::size_t walks = scale == Scale::full ? 5 : 1;
  const std::uint64_t max_iter = 2000;
  std::uint64_t bad = 0, probes = 0, smallest = UINT64_MAX;
  for (std::size_t n : {11u, 15u}) {
    const FlagGraph dd(r, n);
    for (std::size_t k : {2u, 4u}) {
      const std::uint64_t bound = (n + 5) / (2 * k);
      for (std::size_t i = 0; i < walks; ++i) {
        const PolyMap g = dd.zwalk_symbolic(random_zwalk(r, k, rng));
        std::vector<std::vector<RingElem>> samples(8, std::vector<RingElem>(dd.dim()));
        for (auto& s : samples) {
          for (auto& x : s) x = r.sample(rng);
        }
        const OrderProbe p = order_probe(g, samples, max_iter);
        ++probes;
        smallest = std::min(smallest, p.lower_bound);
        if (p.lower_bound < bound) ++bad;
      }
    }
  }
  out.require(bad == 0, std::to_string(bad) + "/" + std::to_string(probes) +
                            " restricted walks below floor((n+5)/2k); smallest lower bound " +
                            std::to_string(smallest));

  // The D(n,K) analogue with bound floor((n+5)/4k).
  const GraphD g15(r, 15);
  std::uint64_t gd_bad = 0;
  for (std::size_t i = 0; i < walks; ++i) {
    const PolyMap g = g15.walk_symbolic(random_walk(r, 4, rng));
    std::vector<std::vector<RingElem>> samples(8, std::vector<RingElem>(15));
    for (auto& s : samples) {
      for (auto& x : s) x = r.sample(rng);
    }
    if (order_probe(g, samples, max_iter).lower_bound < 20 / 8) ++gd_bad;
  }
  out.require(gd_bad == 0, "GD(15," + r.tag() + ") length-2 walks: " + std::to_string(gd_bad) +
                               " below floor(20/8)");

  for (std::size_t n : {2u, 3u}) {
    const std::uint64_t c = dd_cycle_oracle(n, F(3), true);
    const std::uint64_t bound = (n + 5) / 2;
    out.require(c == 0 || c >= bound, "DD(" + std::to_string(n) + ",F 3) shortest directed cycle " +
                                          std::to_string(c) + " >= " + std::to_string(bound));
  }
}

// -- 9 ----------------------------------------------------------------------

void complexity_shape(Outcome& out, Scale scale, std::uint64_t seed) {
  const Ring r = Z(256);
  std::vector<std::size_t> enc_ns{20, 40, 60, 80, 100};
  std::vector<std::size_t> key_ns{10, 20, 30, 40};
  std::vector<std::size_t> key_ps{10, 20, 30};
  int runs = 5;
  if (scale == Scale::smoke) {
    enc_ns = {20, 30, 40};
    key_ns = {10, 20};
    key_ps = {10, 20};
    runs = 3;
  }
  const std::vector<Ring> rings{r};
  const auto enc = bench_encrypt(enc_ns, rings, seed, 60, 8, runs);
  const ShapeCheck slope = check_encrypt_slope(enc, r.tag());
  out.require(slope.pass, "encryption over " + r.tag() + ": " + slope.detail);

  const auto key = bench_keygen(key_ns, key_ps, r, seed, runs);
  const ShapeCheck shape = check_keygen_shape(key);
  out.require(shape.pass, "keygen grid: " + shape.detail);

  const PublicRule rule = make_public_rule(16, r, 10, seed);
  const DensityStats d = monomial_density(rule.public_map);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "density n=16: %zu terms, %zu squarefree cubic, mean ratio to C(16,3) %.3f, max %.3f; ",
                d.terms, d.cubic_squarefree, d.ratio, d.max_ratio);
  out.detail << buf;
}

// -- 10 ---------------------------------------------------------------------

PolyMap random_map(const Ring& r, std::size_t d, std::size_t terms, Rng& rng) {
  std::vector<Poly> coords;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Poly::Term> t;
    for (std::size_t j = 0; j < terms; ++j) {
      std::vector<unsigned> e(d, 0);
      const std::size_t deg = rng.below(4);
      for (std::size_t k = 0; k < deg; ++k) ++e[rng.below(d)];
      t.push_back({Monomial::from_exponents(e), r.sample(rng)});
    }
    coords.push_back(Poly::from_terms(r, d, std::move(t)));
  }
  return PolyMap(r, std::move(coords));
}

void round_trips(Outcome& out, Scale scale, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Ring> rings{Z(256), Z(65536), F(127), Z(std::uint64_t{1} << 32), F(5)};
  const std::size_t maps = scale == Scale::full ? 100 : 20;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < maps; ++i) {
    const Ring& r = rings[i % rings.size()];
    const std::size_t d = 3 + rng.below(8);
    PolyMap f = PolyMap::identity(r, d);
    switch (i % 4) {
      case 0: f = FlagGraph(r, d - 1).zwalk_symbolic(random_zwalk(r, 1 + rng.below(6), rng)); break;
      case 1: f = GraphD(r, d).walk_symbolic(random_walk(r, 2 + 2 * rng.below(4), rng)); break;
      case 2: f = random_map(r, d, 1 + rng.below(12), rng); break;
      default: {
        const AffineMap tau = AffineMap::random_first_row(r, d, rng);
        f = compose(tau.inverse().to_map(),
                    compose(FlagGraph(r, d - 1).zwalk_symbolic(random_zwalk(r, 3, rng)), tau.to_map()));
      }
    }
    const std::string text = to_stablemap(f);
    const PolyMap back = parse_stablemap(text);
    if (!(back == f) || to_stablemap(back) != text) ++bad;
  }
  out.require(bad == 0, "STABLEMAP round trip: " + std::to_string(bad) + "/" +
                            std::to_string(maps) + " failures");

  const Ring r = Z(256);
  const PublicRule rule = make_public_rule(10, r, 10, seed);
  const std::size_t plain = scale == Scale::full ? 1000 : 100;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < plain; ++i) {
    std::vector<RingElem> x(10);
    for (auto& c : x) c = r.sample(rng);
    if (decrypt(rule.key, encrypt(rule.public_map, x)) != x) ++wrong;
  }
  out.require(wrong == 0, "encrypt/decrypt at n=10 over " + r.tag() + ": " +
                              std::to_string(wrong) + "/" + std::to_string(plain) + " failures");
}

struct CriterionInfo {
  const char* title;
  double limit_seconds;  // 0: no limit
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"graph facts", 10},        {"girth bounds", 30},     {"components", 60},
    {"edge invariance", 0},     {"inverse identities", 0}, {"stable degree", 600},
    {"protocol", 0},            {"order bounds", 0},      {"complexity shape", 0},
    {"round trips", 0},
};

}  // namespace

CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed) {
  CriterionResult res;
  res.id = id;
  if (id < 1 || id > kCriterionCount) {
    res.title = "unknown";
    res.detail = "no criterion " + std::to_string(id);
    return res;
  }
  res.title = kCriteria[id - 1].title;
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: graph_facts(out, scale); break;
      case 2: girth_bounds(out, scale); break;
      case 3: components(out, scale); break;
      case 4: edge_invariance(out, scale, seed); break;
      case 5: inverse_identities(out, scale, seed); break;
      case 6: stable_degree(out, scale, seed); break;
      case 7: protocol(out, scale, seed); break;
      case 8: order_bounds(out, scale, seed); break;
      case 9: complexity_shape(out, scale, seed); break;
      case 10: round_trips(out, scale, seed); break;
    }
  } catch (const std::exception& e) {
    out.require(false, std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double limit = kCriteria[id - 1].limit_seconds;
  if (scale == Scale::full && limit > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "time %.1f s <= %.0f s", res.seconds, limit);
    out.require(res.seconds <= limit, buf);
  }
  res.pass = out.pass;
  res.detail = out.detail.str();
  while (!res.detail.empty() && (res.detail.back() == ' ' || res.detail.back() == ';')) {
    res.detail.pop_back();
  }
  return res;
}

std::vector<CriterionResult> verify_suite(
    Scale scale, std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, scale, seed));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " [%.1f s] ", r.seconds);
  return "criterion " + std::to_string(r.id) + " (" + r.title + "): " + (r.pass ? "PASS" : "FAIL") +
         buf + r.detail;
}

}  // namespace stabledeg
