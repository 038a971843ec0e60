#pragma once

#include <cstdint>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

/// Vector of the edge space over the two-element field, stored as the sorted
/// list of edge ids with coefficient 1. Addition is symmetric difference.
class EdgeSetF2 {
 public:
  EdgeSetF2() = default;
  explicit EdgeSetF2(const Graph& host) : host_(&host) {}
  /// Sums the given edges: an id listed twice cancels.
  EdgeSetF2(const Graph& host, std::vector<EdgeId> edges);

  /// Edges of a walk (consecutive vertices must be adjacent).
  static EdgeSetF2 of_path(const Graph& host, const Path& path);
  /// Edges of a closed walk; the closing edge back to the first vertex is implied.
  static EdgeSetF2 of_cycle(const Graph& host, const Path& cycle);

  const Graph* host() const noexcept { return host_; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return edges_.empty(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(EdgeId e) const noexcept;
  bool contains_all(const EdgeSetF2& other) const;

  /// Throws InvalidInput when the host graphs differ.
  EdgeSetF2& operator^=(const EdgeSetF2& other);
  friend EdgeSetF2 operator^(EdgeSetF2 a, const EdgeSetF2& b) { return a ^= b; }
  friend bool operator==(const EdgeSetF2& a, const EdgeSetF2& b) {
    return a.host_ == b.host_ && a.edges_ == b.edges_;
  }

 private:
  const Graph* host_ = nullptr;
  std::vector<EdgeId> edges_;
};

/// Even degree at every vertex.
bool is_cycle_space_element(const EdgeSetF2& x);

/// Splits a cycle-space element into edge-disjoint simple cycles by walking
/// until a vertex repeats. Each cycle starts at its smallest vertex with the
/// smaller neighbor second; cycles are sorted. Throws InvalidInput when x has
/// a vertex of odd degree.
std::vector<Path> decompose_into_cycles(const EdgeSetF2& x);

/// A simple cycle C with E(P) ⊆ E(C) ⊆ x, listed as P followed by the rest of
/// the cycle. Requires that P has at least one edge, E(P) ⊆ x, and every
/// internal vertex of P meets no edge of x outside P; otherwise InvalidInput.
Path extract_cycle_containing_path(const EdgeSetF2& x, const Path& path);

/// Spanning forest plus one fundamental cycle per non-tree edge.
struct CycleBasis {
  std::vector<EdgeId> tree_edges;
  std::vector<EdgeId> chord_edges;
  std::vector<EdgeSetF2> fundamental_cycles;

  std::size_t dimension() const noexcept { return fundamental_cycles.size(); }
};

/// BFS forest rooted at the smallest vertex of each component.
CycleBasis cycle_basis(const Graph& g);

/// Incremental span over the two-element field with packed bit rows.
/// Each stored row is keyed by its lowest set bit.
class F2Span {
 public:
  explicit F2Span(std::size_t bits);

  /// Adds the vector; returns false if it was already in the span.
  bool insert(const std::vector<EdgeId>& ones);
  bool contains(const std::vector<EdgeId>& ones) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t bits() const noexcept { return bits_; }

 private:
  using Row = std::vector<std::uint64_t>;
  Row pack(const std::vector<EdgeId>& ones) const;
  /// Reduces in place; returns the lowest bit left without a pivot, or -1.
  long long reduce(Row& row) const;

  std::size_t bits_;
  std::size_t words_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Every simple cycle of length 3..k, each listed once: it starts at its
/// smallest vertex and its second vertex is smaller than its last. Throws
/// CapacityError once more than `cap` cycles are found.
std::vector<Path> enumerate_short_cycles(const Graph& g, int k, std::size_t cap = kDefaultCycleCap);

/// Whether the cycle space is generated by cycles of length at most k: every
/// fundamental cycle must lie in the span of the enumerated short cycles.
/// CapacityError (not `false`) when the enumeration cap is hit.
bool is_k_sc(const Graph& g, int k, std::size_t cap = kDefaultCycleCap);

}  // namespace qtree
