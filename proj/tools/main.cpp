#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabledeg/bench.hpp"
#include "stabledeg/error.hpp"
#include "stabledeg/flag_dd.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/graph_oracles.hpp"
#include "stabledeg/keyex.hpp"
#include "stabledeg/public_rule.hpp"
#include "stabledeg/ring.hpp"
#include "stabledeg/stablemap.hpp"
#include "stabledeg/verify.hpp"

namespace sd = stabledeg;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

const CLI::Validator kRingTag(
    [](std::string& s) -> std::string {
      try {
        (void)sd::Ring::parse(s);
      } catch (const sd::Error& e) {
        return e.what();
      }
      return {};
    },
    "RING", "ring tag such as Z:256 or F:127");

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sd::Error(sd::Errc::invalid_argument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sd::Error(sd::Errc::invalid_argument, "cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
  return out;
}

// One residue vector per non-empty line.
std::vector<std::string> input_lines(const std::string& inline_text, const std::string& file) {
  std::vector<std::string> lines;
  if (!inline_text.empty()) lines.push_back(inline_text);
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  return lines;
}

// -- ring-info ---------------------------------------------------------------

struct RingInfoArgs {
  std::string ring;
};

int ring_info(const RingInfoArgs& a) {
  const sd::Ring r = sd::Ring::parse(a.ring);
  std::cout << "ring " << r.tag() << '\n'
            << "modulus " << r.modulus() << '\n'
            << "field " << (r.is_field() ? "yes" : "no") << '\n'
            << "regular-elements " << r.regular_count() << '\n'
            << "walks " << (r.has_enough_regular() ? "supported" : "unsupported (needs 3 regular elements)")
            << '\n';
  return kOk;
}

// -- graph verify ------------------------------------------------------------

struct GraphArgs {
  std::size_t k = 0;
  std::uint64_t q = 0;
  bool residue = false;
  bool components = false;
};

int graph_verify(const GraphArgs& a) {
  const sd::Ring r = sd::Ring::make(
      a.residue ? sd::RingKind::residue_ring : sd::RingKind::prime_field, a.q);
  const sd::GraphFacts f = sd::girth_and_regularity_oracle(a.k, r);
  std::uint64_t order = 2;
  for (std::size_t i = 0; i < a.k; ++i) order *= a.q;
  const std::uint64_t bound = a.k % 2 == 1 ? a.k + 5 : a.k + 4;
  const bool girth_ok = f.girth == 0 || f.girth >= bound;
  std::cout << "graph D(" << a.k << "," << r.tag() << ")\n"
            << "order " << f.vertex_count << " (expected " << order << ")\n"
            << "edges " << f.edge_count << '\n'
            << "bipartite " << (f.bipartite ? "yes" : "no") << '\n'
            << "regular-degree " << f.regular_degree << '\n'
            << "girth " << (f.girth == 0 ? std::string("none (forest)") : std::to_string(f.girth))
            << " (bound >= " << bound << ")\n";
  bool ok = f.vertex_count == order && f.bipartite && f.regular_degree == a.q && girth_ok;
  if (a.components) {
    const sd::ComponentReport c = sd::component_oracle(a.k, r);
    std::cout << "components " << c.component_count << '\n'
              << "invariant-fibers " << c.fiber_count << '\n'
              << "components-equal-fibers " << (c.components_equal_fibers ? "yes" : "no") << '\n'
              << "split-fibers " << c.split_fibers << '\n';
    ok = ok && c.components_refine_fibers;
  }
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kFailed;
}

// -- walk run | symbolic -----------------------------------------------------

struct WalkArgs {
  std::size_t n = 0;
  std::string ring;
  std::string walk;
  std::string zwalk;
  std::size_t length = 0;
  bool flag_family = false;
  bool unrestricted = false;
  std::string start;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void require_seed(const WalkArgs& a, const char* why) {
  if (!a.seed) {
    throw CLI::ValidationError("--seed", std::string("required for ") + why);
  }
}

sd::DWalk resolve_dwalk(const WalkArgs& a, const sd::Ring& r, sd::Rng& rng) {
  if (!a.walk.empty()) return sd::parse_walk(a.walk, r);
  require_seed(a, "a random walk");
  return sd::random_walk(r, a.length, rng);
}

sd::ZWalk resolve_zwalk(const WalkArgs& a, const sd::Ring& r, sd::Rng& rng) {
  if (!a.zwalk.empty()) return sd::parse_zwalk(a.zwalk, r);
  require_seed(a, "a random walk");
  return sd::random_zwalk(r, a.length, rng);
}

bool uses_flags(const WalkArgs& a) { return !a.zwalk.empty() || a.flag_family; }

void check_walk_source(const WalkArgs& a) {
  const int given = !a.walk.empty() + !a.zwalk.empty() + (a.length > 0);
  if (given != 1) {
    throw CLI::ValidationError("--walk", "give exactly one of --walk, --zwalk, --length");
  }
}

int walk_run(const WalkArgs& a) {
  check_walk_source(a);
  const sd::Ring r = sd::Ring::parse(a.ring);
  sd::Rng rng(a.seed.value_or(0));
  if (uses_flags(a)) {
    const sd::FlagGraph dd(r, a.n, !a.unrestricted);
    const sd::ZWalk w = resolve_zwalk(a, r, rng);
    sd::Flag f;
    if (!a.start.empty()) {
      f = sd::parse_flag(a.start, r);
    } else {
      require_seed(a, "a random start flag");
      f = dd.random_f1(rng);
    }
    std::cout << "zwalk " << sd::zwalk_to_string(w) << '\n'
              << "start " << sd::to_string(f) << '\n'
              << "end " << sd::to_string(dd.walk_apply(f, w)) << '\n';
    return kOk;
  }
  const sd::GraphD g(r, a.n);
  const sd::DWalk w = resolve_dwalk(a, r, rng);
  sd::Vertex v;
  if (!a.start.empty()) {
    v = sd::parse_vertex(a.start, r);
  } else {
    require_seed(a, "a random start vertex");
    v = g.random_vertex(sd::Side::point, rng);
  }
  const sd::Vertex end = g.walk_apply(v, w);
  std::cout << "walk " << sd::walk_to_string(w) << '\n'
            << "start " << sd::to_string(v) << '\n'
            << "end " << sd::to_string(end) << '\n';
  if (g.n() >= 6) {
    const bool same = g.invariant_vector(v) == g.invariant_vector(end);
    std::cout << "invariant " << (same ? "preserved" : "CHANGED") << '\n';
    if (!same) return kFailed;
  }
  return kOk;
}

int walk_symbolic(const WalkArgs& a) {
  check_walk_source(a);
  const sd::Ring r = sd::Ring::parse(a.ring);
  sd::Rng rng(a.seed.value_or(0));
  sd::PolyMap f = sd::PolyMap::identity(r, 1);
  if (uses_flags(a)) {
    const sd::FlagGraph dd(r, a.n, !a.unrestricted);
    f = dd.zwalk_symbolic(resolve_zwalk(a, r, rng));
  } else {
    f = sd::GraphD(r, a.n).walk_symbolic(resolve_dwalk(a, r, rng));
  }
  write_output(a.out, sd::to_stablemap(f));
  if (!a.out.empty() && a.out != "-") {
    std::cerr << "dim " << f.dim() << ", degree " << f.degree() << ", terms " << f.term_count()
              << '\n';
  }
  return kOk;
}

// -- keygen / encrypt / decrypt ----------------------------------------------

struct KeygenArgs {
  std::size_t n = 0;
  std::string ring;
  std::size_t p = 0;
  std::uint64_t seed = 0;
  std::string public_out;
  std::string private_out;
};

int keygen(const KeygenArgs& a) {
  const sd::Ring r = sd::Ring::parse(a.ring);
  const sd::PublicRule rule = sd::make_public_rule(a.n, r, a.p, a.seed);
  write_output(a.public_out, sd::to_stablemap(rule.public_map));
  write_output(a.private_out, sd::private_key_to_text(rule.key));
  const sd::DensityStats d = sd::monomial_density(rule.public_map);
  std::cerr << "public map: dim " << rule.public_map.dim() << ", degree "
            << rule.public_map.degree() << ", terms " << d.terms << ", squarefree cubic "
            << d.cubic_squarefree << " (C(n,3) = " << d.binom_d3 << " per coordinate)\n";
  return kOk;
}

struct CipherArgs {
  std::string key_file;
  std::string input;
  std::string input_file;
};

int encrypt_cmd(const CipherArgs& a) {
  const sd::PolyMap pub = sd::parse_stablemap(read_file(a.key_file));
  for (const auto& line : input_lines(a.input, a.input_file)) {
    const auto x = sd::parse_residues(line, pub.ring());
    if (x.size() != pub.dim()) {
      throw sd::Error(sd::Errc::dimension_mismatch,
                      "plaintext needs " + std::to_string(pub.dim()) + " residues");
    }
    std::cout << sd::join_residues(sd::encrypt(pub, x)) << '\n';
  }
  return kOk;
}

int decrypt_cmd(const CipherArgs& a) {
  const sd::PrivateKey key = sd::parse_private_key(read_file(a.key_file));
  for (const auto& line : input_lines(a.input, a.input_file)) {
    const auto y = sd::parse_residues(line, key.t1.ring());
    if (y.size() != key.t1.dim()) {
      throw sd::Error(sd::Errc::dimension_mismatch,
                      "ciphertext needs " + std::to_string(key.t1.dim()) + " residues");
    }
    std::cout << sd::join_residues(sd::decrypt(key, y)) << '\n';
  }
  return kOk;
}

// -- dh-demo -----------------------------------------------------------------

struct DhArgs {
  std::size_t n = 8;
  std::string ring = "Z:65536";
  std::uint64_t na = 0;
  std::uint64_t nb = 0;
  std::uint64_t seed = 0;
  std::size_t g_length = 4;
  std::size_t h_length = 2;
  std::string family = "flag";
  std::string tau = "first_row";
  std::string export_secret;
  std::string out;
};

int dh_demo(const DhArgs& a) {
  sd::SecretParams params;
  params.n = a.n;
  params.ring = sd::Ring::parse(a.ring);
  params.g_length = a.g_length;
  params.h_length = a.h_length;
  params.family = a.family == "graph" ? sd::WalkFamily::graph : sd::WalkFamily::flag;
  params.tau = a.tau == "dense"      ? sd::TauStyle::dense
               : a.tau == "monomial" ? sd::TauStyle::monomial
                                     : sd::TauStyle::first_row;
  if (a.na * a.nb > sd::kMaxExponentKey || a.na == 0 || a.nb == 0) {
    throw CLI::ValidationError("--na/--nb", "need 1 <= na * nb <= " +
                                                std::to_string(sd::kMaxExponentKey));
  }
  const sd::PrivateSeed secret = sd::make_secret(params, a.seed);
  sd::Rng rng(a.seed ^ 0x76u);
  std::vector<sd::RingElem> v(params.n);
  for (auto& x : v) x = params.ring.sample(rng);
  const sd::Transcript t = sd::run_exchange(secret, a.na, a.nb, v);
  write_output(a.out, sd::to_text(t));
  if (!a.export_secret.empty()) write_output(a.export_secret, sd::secret_to_text(secret));
  std::cerr << "collision: dim " << t.collision.dim() << ", degree " << t.collision.degree()
            << ", terms " << t.collision.term_count() << "; both sides agree\n";
  return kOk;
}

// -- bench -------------------------------------------------------------------

struct BenchArgs {
  std::string ns;
  std::string ps = "10,20,30";
  std::string ring = "Z:256";
  std::string rings = "Z:256,Z:65536,Z:4294967296";
  std::uint64_t seed = 0;
  int runs = 5;
  bool csv = false;
  std::string csv_out;
};

void emit_bench(const BenchArgs& a, const std::vector<sd::BenchRow>& rows,
                const std::string& table) {
  if (a.csv) {
    std::cout << sd::to_csv(rows);
  } else {
    std::cout << table;
  }
  if (!a.csv_out.empty()) write_output(a.csv_out, sd::to_csv(rows));
}

int bench_keygen(const BenchArgs& a) {
  const auto ns = parse_sizes(a.ns.empty() ? "10,20,30,40" : a.ns);
  const auto ps = parse_sizes(a.ps);
  const auto rows = sd::bench_keygen(ns, ps, sd::Ring::parse(a.ring), a.seed, a.runs);
  emit_bench(a, rows, sd::keygen_table(rows));
  const sd::ShapeCheck c = sd::check_keygen_shape(rows);
  std::cerr << "shape: " << c.detail << '\n';
  return c.pass ? kOk : kFailed;
}

int bench_encrypt(const BenchArgs& a) {
  const auto ns = parse_sizes(a.ns.empty() ? "20,40,60,80,100" : a.ns);
  std::vector<sd::Ring> rings;
  std::stringstream ss(a.rings);
  std::string tok;
  while (std::getline(ss, tok, ',')) rings.push_back(sd::Ring::parse(tok));
  const auto rows = sd::bench_encrypt(ns, rings, a.seed, 60, 8, a.runs);
  emit_bench(a, rows, sd::encrypt_table(rows));
  bool ok = true;
  for (const sd::Ring& r : rings) {
    const sd::ShapeCheck c = sd::check_encrypt_slope(rows, r.tag());
    std::cerr << r.tag() << ": " << c.detail << '\n';
    ok = ok && c.pass;
  }
  return ok ? kOk : kFailed;
}

// -- verify-suite ------------------------------------------------------------

struct SuiteArgs {
  std::string scale = "smoke";
  std::uint64_t seed = 1;
  std::vector<int> criteria;
};

int verify_suite(const SuiteArgs& a) {
  const sd::Scale scale = a.scale == "full" ? sd::Scale::full : sd::Scale::smoke;
  bool ok = true;
  auto report = [&](const sd::CriterionResult& r) {
    std::cout << sd::format_result(r) << std::endl;
    ok = ok && r.pass;
  };
  if (a.criteria.empty()) {
    sd::verify_suite(scale, a.seed, report);
  } else {
    for (int id : a.criteria) report(sd::run_criterion(id, scale, a.seed));
  }
  return ok ? kOk : kFailed;
}

int exit_code_for(sd::Errc code) {
  switch (code) {
    case sd::Errc::stability_violation:
    case sd::Errc::collision_mismatch:
      return kFailed;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable-degree polynomial maps from the graphs D(n,K)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "stabledeg 0.1.0");

  RingInfoArgs ring_args;
  auto* ring_cmd = app.add_subcommand("ring-info", "Describe a ring Z_m or F_p");
  ring_cmd->add_option("--ring", ring_args.ring, "Ring tag")->required()->check(kRingTag);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "Graph oracles");
  graph_cmd->require_subcommand(1);
  auto* graph_verify_cmd =
      graph_cmd->add_subcommand("verify", "Order, regularity, bipartiteness and girth of D(k,q)");
  graph_verify_cmd->add_option("--k", graph_args.k, "Graph parameter")->required()->check(
      CLI::Range(1, 32));
  graph_verify_cmd->add_option("--q", graph_args.q, "Field size (prime)")->required()->check(
      CLI::Range(2, 1 << 20));
  graph_verify_cmd->add_flag("--residue-ring", graph_args.residue, "Use Z_q instead of F_q");
  graph_verify_cmd->add_flag("--components", graph_args.components,
                             "Also compare components with invariant fibers");

  WalkArgs walk_args;
  auto* walk_cmd = app.add_subcommand("walk", "Apply walks to vertices or build their maps");
  walk_cmd->require_subcommand(1);
  auto add_walk_options = [&](CLI::App* c) {
    c->add_option("--n", walk_args.n, "Graph parameter: D(n,K), or DD(n,K) for Z-walks")
        ->required()
        ->check(CLI::Range(1, 4096));
    c->add_option("--ring", walk_args.ring, "Ring tag")->required()->check(kRingTag);
    c->add_option("--walk", walk_args.walk, "Colours of a D-walk, e.g. 1,-2,3,4");
    c->add_option("--zwalk", walk_args.zwalk, "Z-walk pairs, e.g. 1:2,3:4");
    c->add_option("--length", walk_args.length, "Random walk of this length (needs --seed)")
        ->check(CLI::Range(1, 1 << 16));
    c->add_flag("--flags", walk_args.flag_family, "Random walks are Z-walks");
    c->add_flag("--unrestricted", walk_args.unrestricted, "Allow non-regular Z colours");
    c->add_option("--seed", walk_args.seed, "Seed for random walks and start points");
  };
  auto* walk_run_cmd = walk_cmd->add_subcommand("run", "Walk from a vertex or flag");
  add_walk_options(walk_run_cmd);
  walk_run_cmd->add_option("--start", walk_args.start,
                           "Start vertex 'P 1,2,..' / 'L ..' or flag 'F1 ..'");
  auto* walk_sym_cmd = walk_cmd->add_subcommand("symbolic", "Print the walk's map as STABLEMAP");
  add_walk_options(walk_sym_cmd);
  walk_sym_cmd->add_option("--out", walk_args.out, "Output file (default stdout)");

  KeygenArgs key_args;
  auto* key_cmd = app.add_subcommand("keygen", "Generate a public rule and its private key");
  key_cmd->add_option("--n", key_args.n, "Dimension")->required()->check(CLI::Range(2, 100));
  key_cmd->add_option("--ring", key_args.ring, "Ring tag")->required()->check(kRingTag);
  key_cmd->add_option("--p", key_args.p, "Walk length (even)")->required()->check(
      CLI::Range(2, 60));
  key_cmd->add_option("--seed", key_args.seed, "Seed")->required();
  key_cmd->add_option("--public-out", key_args.public_out, "Public STABLEMAP file")->required();
  key_cmd->add_option("--private-out", key_args.private_out, "Private key file")->required();

  CipherArgs enc_args, dec_args;
  auto* enc_cmd = app.add_subcommand("encrypt", "Evaluate a public map on plaintext vectors");
  enc_cmd->add_option("--public", enc_args.key_file, "Public STABLEMAP file")
      ->required()
      ->check(CLI::ExistingFile);
  enc_cmd->add_option("--input", enc_args.input, "Comma-separated residues");
  enc_cmd->add_option("--input-file", enc_args.input_file, "One vector per line")
      ->check(CLI::ExistingFile);
  auto* dec_cmd = app.add_subcommand("decrypt", "Invert ciphertext vectors with a private key");
  dec_cmd->add_option("--private", dec_args.key_file, "Private key file")
      ->required()
      ->check(CLI::ExistingFile);
  dec_cmd->add_option("--input", dec_args.input, "Comma-separated residues");
  dec_cmd->add_option("--input-file", dec_args.input_file, "One vector per line")
      ->check(CLI::ExistingFile);

  DhArgs dh_args;
  auto* dh_cmd = app.add_subcommand("dh-demo", "Run a full key exchange and print the transcript");
  dh_cmd->add_option("--n", dh_args.n, "Map dimension")->check(CLI::Range(2, 256));
  dh_cmd->add_option("--ring", dh_args.ring, "Ring tag")->check(kRingTag);
  dh_cmd->add_option("--na", dh_args.na, "Alice's exponent")->required()->check(
      CLI::PositiveNumber);
  dh_cmd->add_option("--nb", dh_args.nb, "Bob's exponent")->required()->check(
      CLI::PositiveNumber);
  dh_cmd->add_option("--seed", dh_args.seed, "Seed")->required();
  dh_cmd->add_option("--g-length", dh_args.g_length, "Length of g")->check(CLI::Range(1, 64));
  dh_cmd->add_option("--h-length", dh_args.h_length, "Length of h")->check(CLI::Range(1, 64));
  dh_cmd->add_option("--family", dh_args.family, "Walk family")->check(
      CLI::IsMember({"flag", "graph"}));
  dh_cmd->add_option("--tau", dh_args.tau, "Affine conjugator")->check(
      CLI::IsMember({"first_row", "monomial", "dense"}));
  dh_cmd->add_option("--export-secret", dh_args.export_secret, "Write Alice's secret here");
  dh_cmd->add_option("--out", dh_args.out, "Transcript file (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Timing tables");
  bench_cmd->require_subcommand(1);
  auto add_bench_options = [&](CLI::App* c) {
    c->add_option("--ns", bench_args.ns, "Comma-separated n values");
    c->add_option("--seed", bench_args.seed, "Seed")->required();
    c->add_option("--runs", bench_args.runs, "Timed runs per cell")->check(CLI::Range(1, 100));
    c->add_flag("--csv", bench_args.csv, "Print op,n,p,ring,micros lines instead of a table");
    c->add_option("--csv-out", bench_args.csv_out, "Also write CSV to this file");
  };
  auto* bench_key_cmd = bench_cmd->add_subcommand("keygen", "Key generation over an n x p grid");
  add_bench_options(bench_key_cmd);
  bench_key_cmd->add_option("--ps", bench_args.ps, "Comma-separated walk lengths");
  bench_key_cmd->add_option("--ring", bench_args.ring, "Ring tag")->check(kRingTag);
  auto* bench_enc_cmd = bench_cmd->add_subcommand("encrypt", "Encryption time per ring");
  add_bench_options(bench_enc_cmd);
  bench_enc_cmd->add_option("--rings", bench_args.rings, "Comma-separated ring tags");

  SuiteArgs suite_args;
  auto* suite_cmd = app.add_subcommand("verify-suite", "Run the acceptance checks");
  suite_cmd->add_option("--scale", suite_args.scale, "smoke or full")->check(
      CLI::IsMember({"smoke", "full"}));
  suite_cmd->add_option("--seed", suite_args.seed, "Seed")->required();
  suite_cmd->add_option("--criterion", suite_args.criteria, "Run only these criteria")->check(
      CLI::Range(1, sd::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ring_cmd) return ring_info(ring_args);
    if (*graph_verify_cmd) return graph_verify(graph_args);
    if (*walk_run_cmd) return walk_run(walk_args);
    if (*walk_sym_cmd) return walk_symbolic(walk_args);
    if (*key_cmd) return keygen(key_args);
    if (*enc_cmd) return encrypt_cmd(enc_args);
    if (*dec_cmd) return decrypt_cmd(dec_args);
    if (*dh_cmd) return dh_demo(dh_args);
    if (*bench_key_cmd) return bench_keygen(bench_args);
    if (*bench_enc_cmd) return bench_encrypt(bench_args);
    if (*suite_cmd) return verify_suite(suite_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
