#include "stabledeg/stablemap.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "stabledeg/error.hpp"

namespace stabledeg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t first_line) : lines_(split(text, '\n')), first_(first_line) {
    // A trailing newline leaves one empty piece; drop it and any blank tail.
    while (!lines_.empty() && trim(lines_.back()).empty()) lines_.pop_back();
  }

  bool done() const { return next_ >= lines_.size(); }
  std::size_t line_no() const { return first_ + next_ - 1; }

  std::string_view next() {
    if (done()) fail_at(first_ + lines_.size(), "unexpected end of input");
    return lines_[next_++];
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(line_no(), msg); }

  [[noreturn]] static void fail_at(std::size_t line, const std::string& msg) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t first_;
  std::size_t next_ = 0;
};

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && end == s.data() + s.size();
}

Poly parse_poly(const LineParser& lp, std::string_view body, const Ring& ring, std::size_t dim) {
  body = trim(body);
  if (body.empty()) lp.fail("empty polynomial");
  std::vector<Poly::Term> terms;
  for (std::string_view raw : split(body, '+')) {
    const std::string_view term = trim(raw);
    if (term.empty()) lp.fail("empty term");
    std::vector<unsigned> exps(dim, 0);
    RingElem coef = ring.one();
    bool first = true;
    for (std::string_view raw_factor : split(term, '*')) {
      const std::string_view factor = trim(raw_factor);
      if (factor.empty()) lp.fail("empty factor in '" + std::string(term) + "'");
      if (factor.front() != 'x') {
        if (!first) lp.fail("coefficient must come first in '" + std::string(term) + "'");
        std::uint64_t c = 0;
        if (!parse_int(factor, c)) lp.fail("bad coefficient '" + std::string(factor) + "'");
        if (c >= ring.modulus()) {
          lp.fail("coefficient " + std::to_string(c) + " is not a residue of " + ring.tag());
        }
        coef = RingElem{c};
      } else {
        const std::size_t caret = factor.find('^');
        std::size_t var = 0;
        unsigned e = 1;
        if (!parse_int(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), var) ||
            (caret != std::string_view::npos && !parse_int(factor.substr(caret + 1), e))) {
          lp.fail("bad variable '" + std::string(factor) + "'");
        }
        if (var < 1 || var > dim) lp.fail("variable '" + std::string(factor) + "' outside dimension");
        if (e < 1 || e > kMaxExponent) lp.fail("bad exponent in '" + std::string(factor) + "'");
        if (exps[var - 1] != 0) lp.fail("repeated variable in '" + std::string(term) + "'");
        exps[var - 1] = e;
      }
      first = false;
    }
    terms.push_back({Monomial::from_exponents(exps), coef});
  }
  return Poly::from_terms(ring, dim, std::move(terms));
}

}  // namespace

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.coef.value);
    for (std::size_t i = 0; i < t.mono.factor_count(); ++i) {
      out += "*x";
      out += std::to_string(t.mono.var(i) + 1);
      if (t.mono.exp(i) != 1) {
        out += '^';
        out += std::to_string(t.mono.exp(i));
      }
    }
  }
  return out;
}

std::string to_stablemap(const PolyMap& f) {
  std::ostringstream os;
  os << "STABLEMAP v1\n"
     << "ring " << f.ring().tag() << '\n'
     << "dim " << f.dim() << '\n';
  for (std::size_t i = 0; i < f.dim(); ++i) {
    os << "coord " << i + 1 << ": " << poly_to_string(f.coord(i)) << '\n';
  }
  return os.str();
}

PolyMap parse_stablemap(std::string_view text, std::size_t first_line) {
  LineParser lp(text, first_line);
  if (trim(lp.next()) != "STABLEMAP v1") lp.fail("expected 'STABLEMAP v1'");

  const std::string_view ring_line = trim(lp.next());
  if (ring_line.substr(0, 5) != "ring ") lp.fail("expected 'ring <Z|F> <modulus>'");
  Ring ring = Ring::make(RingKind::residue_ring, 2);
  try {
    ring = Ring::parse(ring_line.substr(5));
  } catch (const Error& e) {
    lp.fail(e.what());
  }

  const std::string_view dim_line = trim(lp.next());
  std::size_t dim = 0;
  if (dim_line.substr(0, 4) != "dim " || !parse_int(dim_line.substr(4), dim) || dim == 0) {
    lp.fail("expected 'dim <positive integer>'");
  }

  std::vector<Poly> coords;
  coords.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    const std::string_view line = trim(lp.next());
    const std::string prefix = "coord " + std::to_string(i) + ":";
    if (line.substr(0, prefix.size()) != prefix) lp.fail("expected '" + prefix + "'");
    coords.push_back(parse_poly(lp, line.substr(prefix.size()), ring, dim));
  }
  if (!lp.done()) {
    lp.next();
    lp.fail("unexpected content after the last coordinate");
  }
  return PolyMap(ring, std::move(coords));
}

}  // namespace stabledeg
