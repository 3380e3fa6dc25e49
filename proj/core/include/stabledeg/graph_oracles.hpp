#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabledeg/graph_d.hpp"

namespace stabledeg {

// Brute-force checks on the fully materialized graph D(k,K). All of them
// refuse graphs with more than 10^6 vertices (Error{too_large}).
inline constexpr std::uint64_t kOracleVertexLimit = 1'000'000;

// Vertices are numbered points first: index = base-|K| digits of the
// coordinates (first coordinate most significant), lines offset by |K|^k.
class MaterializedGraph {
 public:
  explicit MaterializedGraph(const GraphD& g);

  const GraphD& graph() const noexcept { return g_; }
  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t half() const noexcept { return half_; }
  const std::vector<std::uint32_t>& neighbours(std::size_t v) const { return adj_[v]; }

  Vertex vertex(std::size_t index) const;
  std::size_t index(const Vertex& v) const;

 private:
  const GraphD& g_;
  std::size_t half_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

struct GraphFacts {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  bool bipartite = false;
  // |K| when every vertex has exactly that many distinct neighbours, else 0.
  std::uint64_t regular_degree = 0;
  // Length of a shortest cycle; 0 when the graph is a forest.
  std::uint64_t girth = 0;
};

GraphFacts girth_and_regularity_oracle(std::size_t k, const Ring& ring);

struct ComponentReport {
  std::uint64_t vertex_count = 0;
  std::uint64_t component_count = 0;
  // Number of distinct invariant vectors; 1 when n < 6 (empty invariant).
  std::uint64_t fiber_count = 0;
  // Every component lies inside a single fiber.
  bool components_refine_fibers = false;
  // ... and every fiber is a single component.
  bool components_equal_fibers = false;
  std::uint64_t split_fibers = 0;  // fibers made of 2 or more components
  std::vector<std::uint32_t> component_of;
};

ComponentReport component_oracle(std::size_t k, const Ring& ring);

}  // namespace stabledeg
