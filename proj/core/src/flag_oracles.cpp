#include "stabledeg/flag_oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stabledeg/error.hpp"

namespace stabledeg {

StablePowerReport stable_power_check(const PolyMap& g, std::size_t kmax) {
  StablePowerReport rep;
  rep.pass = true;
  PolyMap cur = g;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k > 1) cur = compose(g, cur);
    rep.degrees.push_back(cur.degree());
    rep.identity.push_back(cur.is_identity());
    if (cur.degree() > 3) rep.pass = false;
  }
  return rep;
}

namespace {

std::optional<std::uint64_t> domain_size(const Ring& ring, std::size_t dim) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    size *= ring.modulus();
    if (size > kEnumerableDomain) return std::nullopt;
  }
  return size;
}

std::vector<RingElem> decode(std::uint64_t index, const Ring& ring, std::size_t dim) {
  std::vector<RingElem> v(dim);
  for (std::size_t i = dim; i-- > 0;) {
    v[i] = RingElem{index % ring.modulus()};
    index /= ring.modulus();
  }
  return v;
}

std::uint64_t encode(std::span<const RingElem> v, const Ring& ring) {
  std::uint64_t index = 0;
  for (RingElem x : v) index = index * ring.modulus() + x.value;
  return index;
}

// lcm of the cycle lengths of g on the whole domain, or nullopt when g is not
// a permutation there or the lcm overflows.
std::optional<std::uint64_t> exact_order(const PolyMap& g, std::uint64_t size) {
  const Ring& ring = g.ring();
  std::vector<std::uint32_t> image(size);
  std::vector<bool> hit(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    const auto y = encode(g.eval(decode(i, ring, g.dim())), ring);
    if (hit[y]) return std::nullopt;
    hit[y] = true;
    image[i] = static_cast<std::uint32_t>(y);
  }
  std::vector<bool> done(size, false);
  std::uint64_t order = 1;
  for (std::uint64_t s = 0; s < size; ++s) {
    if (done[s]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = s; !done[x]; x = image[x]) {
      done[x] = true;
      ++len;
    }
    const std::uint64_t part = order / std::gcd(order, len);
    if (part > UINT64_MAX / len) return std::nullopt;
    order = part * len;
  }
  return order;
}

}  // namespace

OrderProbe order_probe(const PolyMap& g, std::span<const std::vector<RingElem>> samples,
                       std::uint64_t max_iter) {
  OrderProbe probe;
  for (const auto& v : samples) {
    std::vector<RingElem> x = g.eval(v);
    std::uint64_t steps = 1;
    while (x != v && steps <= max_iter) {
      x = g.eval(x);
      ++steps;
    }
    if (x != v) {
      probe.capped = true;
      steps = max_iter + 1;
    }
    probe.lower_bound = std::max(probe.lower_bound, steps);
  }
  if (auto size = domain_size(g.ring(), g.dim())) probe.exact = exact_order(g, *size);
  return probe;
}

std::uint64_t dd_cycle_oracle(std::size_t n, const Ring& ring, bool restricted) {
  const FlagGraph dd(ring, n, restricted);
  const auto half_opt = domain_size(ring, dd.dim());
  if (!half_opt) {
    throw Error(Errc::too_large, "DD(" + std::to_string(n) + ", " + ring.tag() +
                                     ") has more than " + std::to_string(kEnumerableDomain) +
                                     " flags per side");
  }
  const std::uint64_t half = *half_opt;
  std::vector<RingElem> colours;
  for (std::uint64_t c = 1; c < ring.modulus(); ++c) {
    if (!restricted || ring.is_regular(RingElem{c})) colours.push_back(RingElem{c});
  }

  std::vector<std::vector<std::uint32_t>> out(2 * half);
  for (std::uint64_t i = 0; i < 2 * half; ++i) {
    const Flag f{i < half ? FlagSide::f1 : FlagSide::f2, decode(i % half, ring, dd.dim())};
    for (RingElem c : colours) {
      const Flag g = dd.flag_step(f, c);
      const std::uint64_t j = encode(g.data, ring) + (g.side == FlagSide::f1 ? 0 : half);
      out[i].push_back(static_cast<std::uint32_t>(j));
    }
  }

  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint32_t> dist(2 * half);
  std::vector<std::uint32_t> seen_at(2 * half, UINT32_MAX);
  for (std::uint64_t s = 0; s < 2 * half; ++s) {
    const auto stamp = static_cast<std::uint32_t>(s);
    seen_at[s] = stamp;
    dist[s] = 0;
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
    bool closed = false;
    while (!queue.empty() && !closed) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      if (std::uint64_t{dist[u]} + 1 >= best) break;
      for (std::uint32_t w : out[u]) {
        if (w == s) {
          best = std::uint64_t{dist[u]} + 1;
          closed = true;
          break;
        }
        if (seen_at[w] != stamp) {
          seen_at[w] = stamp;
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return best == UINT64_MAX ? 0 : best;
}

}  // namespace stabledeg
