#include "stabledeg/public_rule.hpp"

#include <charconv>
#include <sstream>

#include "stabledeg/error.hpp"

namespace stabledeg {

PublicRule make_public_rule(std::size_t n, const Ring& ring, DWalk walk, std::uint64_t seed,
                            KeygenRoute route) {
  if (walk.empty() || walk.size() % 2 != 0) {
    throw Error(Errc::invalid_argument, "the walk must have positive even length");
  }
  Rng rng(seed);
  const GraphD d(ring, n);
  AffineMap t1 = AffineMap::random_first_row(ring, d.n(), rng);
  AffineMap t2 = AffineMap::identity(ring, d.n());
  PolyMap w = route == KeygenRoute::walk_from_t1 ? d.walk_symbolic_from(t1.to_map(), walk)
                                                 : compose(d.walk_symbolic(walk), t1.to_map());
  PolyMap pub = compose(t2.to_map(), w);
  return PublicRule{std::move(pub), PrivateKey{std::move(t1), std::move(walk), std::move(t2)}};
}

PublicRule make_public_rule(std::size_t n, const Ring& ring, std::size_t walk_length,
                            std::uint64_t seed, KeygenRoute route) {
  Rng rng(seed ^ 0x5bd1e995u);
  return make_public_rule(n, ring, random_walk(ring, walk_length, rng), seed, route);
}

std::vector<RingElem> encrypt(const PolyMap& public_map, std::span<const RingElem> x) {
  return public_map.eval(x);
}

std::vector<RingElem> decrypt(const PrivateKey& key, std::span<const RingElem> y) {
  const Ring& ring = key.t1.ring();
  const GraphD d(ring, key.t1.dim());
  const std::vector<RingElem> u = key.t2.inverse().apply(y);
  const Vertex back = d.walk_apply(Vertex{Side::point, u}, inverse_walk(key.walk, ring));
  return key.t1.inverse().apply(back.coords);
}

namespace {

void affine_to_text(std::ostringstream& os, const char* name, const AffineMap& a) {
  os << name << ' ' << (a.form() == AffineForm::first_row ? "first_row" : "dense") << '\n';
  std::vector<RingElem> row(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) row[j] = a.at(i, j);
    os << join_residues(row) << '\n';
  }
  os << "shift " << join_residues(a.shift()) << '\n';
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t nl = text_.find('\n', pos_);
    const std::size_t end = nl == text_.npos ? text_.size() : nl;
    std::string_view line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_;
    return line;
  }

  // Rest of a line that must start with `key` and a space.
  std::string_view field(std::string_view key) {
    const std::string_view line = next();
    if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
        line[key.size()] != ' ') {
      fail("expected '" + std::string(key) + "'");
    }
    return line.substr(key.size() + 1);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, "line " + std::to_string(line_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  template <class F>
  auto guarded(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() != Errc::parse_error && e.code() != Errc::singular_matrix &&
          e.code() != Errc::invalid_argument) {
        throw;
      }
      fail(e.what());
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

AffineMap parse_affine(LineReader& in, std::string_view name, const Ring& ring, std::size_t dim) {
  const std::string_view form = in.field(name);
  if (form != "first_row" && form != "dense") in.fail("unknown affine form");
  std::vector<RingElem> matrix;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto row = in.guarded([&] { return parse_residues(in.next(), ring); });
    if (row.size() != dim) in.fail("matrix row needs " + std::to_string(dim) + " entries");
    matrix.insert(matrix.end(), row.begin(), row.end());
  }
  auto shift = in.guarded([&] { return parse_residues(in.field("shift"), ring); });
  if (shift.size() != dim) in.fail("shift needs " + std::to_string(dim) + " entries");
  return in.guarded([&] {
    return AffineMap(ring, dim, std::move(matrix), std::move(shift),
                     form == "first_row" ? AffineForm::first_row : AffineForm::dense);
  });
}

}  // namespace

std::string private_key_to_text(const PrivateKey& key) {
  std::ostringstream os;
  os << "PRIVATE-KEY v1\n";
  os << "ring " << key.t1.ring().tag() << '\n';
  os << "dim " << key.t1.dim() << '\n';
  os << "walk " << walk_to_string(key.walk) << '\n';
  affine_to_text(os, "t1", key.t1);
  affine_to_text(os, "t2", key.t2);
  return os.str();
}

PrivateKey parse_private_key(std::string_view text) {
  LineReader in(text);
  if (in.next() != "PRIVATE-KEY v1") in.fail("expected 'PRIVATE-KEY v1'");
  const Ring ring = in.guarded([&] { return Ring::parse(in.field("ring")); });
  std::size_t dim = 0;
  {
    const std::string_view d = in.field("dim");
    auto [end, ec] = std::from_chars(d.data(), d.data() + d.size(), dim);
    if (ec != std::errc() || end != d.data() + d.size() || dim < 2) in.fail("bad dimension");
  }
  DWalk walk = in.guarded([&] { return parse_walk(in.field("walk"), ring); });
  if (walk.empty() || walk.size() % 2 != 0) in.fail("the walk must have positive even length");
  AffineMap t1 = parse_affine(in, "t1", ring, dim);
  AffineMap t2 = parse_affine(in, "t2", ring, dim);
  while (!in.at_end()) {
    if (!in.next().empty()) in.fail("trailing content");
  }
  return PrivateKey{std::move(t1), std::move(walk), std::move(t2)};
}

}  // namespace stabledeg
