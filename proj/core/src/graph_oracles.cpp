#include "stabledeg/graph_oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "stabledeg/error.hpp"

namespace stabledeg {

namespace {

std::size_t checked_half(const GraphD& g) {
  const std::uint64_t q = g.ring().modulus();
  std::uint64_t half = 1;
  for (std::size_t i = 0; i < g.n(); ++i) {
    half *= q;
    if (2 * half > kOracleVertexLimit) {
      throw Error(Errc::too_large, "D(" + std::to_string(g.n()) + ", " + g.ring().tag() +
                                       ") has more than " + std::to_string(kOracleVertexLimit) +
                                       " vertices");
    }
  }
  return half;
}

}  // namespace

MaterializedGraph::MaterializedGraph(const GraphD& g) : g_(g), half_(checked_half(g)) {
  adj_.resize(2 * half_);
  const Ring& r = g.ring();
  for (std::size_t v = 0; v < half_; ++v) {
    const Vertex p = vertex(v);
    for (std::uint64_t c = 0; c < r.modulus(); ++c) {
      const Vertex l = g.line_through(p, r.add(p.coords[0], RingElem{c}));
      const std::size_t w = index(l);
      adj_[v].push_back(static_cast<std::uint32_t>(w));
      adj_[w].push_back(static_cast<std::uint32_t>(v));
    }
  }
}

Vertex MaterializedGraph::vertex(std::size_t index) const {
  const std::uint64_t q = g_.ring().modulus();
  Vertex v{index < half_ ? Side::point : Side::line, std::vector<RingElem>(g_.n())};
  std::uint64_t rest = index % half_;
  for (std::size_t i = g_.n(); i-- > 0;) {
    v.coords[i] = RingElem{rest % q};
    rest /= q;
  }
  return v;
}

std::size_t MaterializedGraph::index(const Vertex& v) const {
  const std::uint64_t q = g_.ring().modulus();
  std::size_t idx = 0;
  for (RingElem c : v.coords) idx = idx * q + c.value;
  return v.side == Side::point ? idx : idx + half_;
}

GraphFacts girth_and_regularity_oracle(std::size_t k, const Ring& ring) {
  const GraphD g(ring, k);
  const MaterializedGraph m(g);
  const std::size_t nv = m.vertex_count();
  GraphFacts f;
  f.vertex_count = nv;

  bool regular = true;
  for (std::size_t v = 0; v < nv; ++v) {
    auto nb = m.neighbours(v);
    f.edge_count += nb.size();
    std::sort(nb.begin(), nb.end());
    if (nb.size() != ring.modulus() || std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      regular = false;
    }
  }
  f.edge_count /= 2;
  f.regular_degree = regular ? ring.modulus() : 0;

  std::vector<int> colour(nv, -1);
  f.bipartite = true;
  for (std::size_t s = 0; s < nv && f.bipartite; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && f.bipartite) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t w : m.neighbours(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          f.bipartite = false;
          break;
        }
      }
    }
  }

  // Shortest cycle: BFS from every vertex; a non-tree edge (u,w) closes a
  // cycle of length at most dist[u] + dist[w] + 1, and the minimum over all
  // roots is exact.
  std::uint64_t best = UINT64_MAX;
  std::vector<std::uint32_t> dist(nv), parent(nv);
  std::vector<std::uint32_t> seen_at(nv, UINT32_MAX);
  for (std::size_t root = 0; root < nv; ++root) {
    const auto stamp = static_cast<std::uint32_t>(root);
    seen_at[root] = stamp;
    dist[root] = 0;
    parent[root] = UINT32_MAX;
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(root)};
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      if (2 * std::uint64_t{dist[u]} + 1 >= best) break;
      bool skipped_parent = false;
      for (std::uint32_t w : m.neighbours(u)) {
        if (w == parent[u] && !skipped_parent) {
          skipped_parent = true;
          continue;
        }
        if (seen_at[w] != stamp) {
          seen_at[w] = stamp;
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          best = std::min<std::uint64_t>(best, std::uint64_t{dist[u]} + dist[w] + 1);
        }
      }
    }
  }
  f.girth = best == UINT64_MAX ? 0 : best;
  return f;
}

ComponentReport component_oracle(std::size_t k, const Ring& ring) {
  const GraphD g(ring, k);
  const MaterializedGraph m(g);
  const std::size_t nv = m.vertex_count();
  ComponentReport rep;
  rep.vertex_count = nv;
  rep.component_of.assign(nv, UINT32_MAX);

  std::uint32_t next = 0;
  for (std::size_t s = 0; s < nv; ++s) {
    if (rep.component_of[s] != UINT32_MAX) continue;
    rep.component_of[s] = next;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t w : m.neighbours(u)) {
        if (rep.component_of[w] == UINT32_MAX) {
          rep.component_of[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  rep.component_count = next;

  std::map<std::vector<std::uint64_t>, std::uint32_t> fiber_ids;
  std::vector<std::uint32_t> fiber_of(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<std::uint64_t> key;
    if (g.n() >= 6) {
      for (RingElem a : g.invariant_vector(m.vertex(v))) key.push_back(a.value);
    }
    auto [it, inserted] = fiber_ids.try_emplace(std::move(key), static_cast<std::uint32_t>(fiber_ids.size()));
    fiber_of[v] = it->second;
  }
  rep.fiber_count = fiber_ids.size();

  std::vector<std::set<std::uint32_t>> fibers_in_component(next);
  std::vector<std::set<std::uint32_t>> components_in_fiber(rep.fiber_count);
  for (std::size_t v = 0; v < nv; ++v) {
    fibers_in_component[rep.component_of[v]].insert(fiber_of[v]);
    components_in_fiber[fiber_of[v]].insert(rep.component_of[v]);
  }
  rep.components_refine_fibers =
      std::all_of(fibers_in_component.begin(), fibers_in_component.end(),
                  [](const auto& s) { return s.size() == 1; });
  rep.split_fibers = static_cast<std::uint64_t>(
      std::count_if(components_in_fiber.begin(), components_in_fiber.end(),
                    [](const auto& s) { return s.size() > 1; }));
  rep.components_equal_fibers = rep.components_refine_fibers && rep.split_fibers == 0;
  return rep;
}

}  // namespace stabledeg
