#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

inline constexpr int kUnreached = -1;
inline constexpr int kNoCutoff = -1;

/// Reusable breadth-first search state.
///
/// Visited marks are generation-stamped so repeated searches on a large graph
/// cost O(visited) instead of O(V). Not thread-safe; use one per worker.
class Bfs {
 public:
  explicit Bfs(const Graph& g);

  /// Multi-source search. Only vertices accepted by `allowed` are entered
  /// (sources are always entered). `cutoff < 0` means unbounded.
  void run(std::span<const Vertex> sources, int cutoff = kNoCutoff,
           const std::function<bool(Vertex)>& allowed = {});
  void run(Vertex source, int cutoff = kNoCutoff, const std::function<bool(Vertex)>& allowed = {}) {
    run(std::span<const Vertex>(&source, 1), cutoff, allowed);
  }

  bool reached(Vertex v) const noexcept { return stamp_[v] == generation_; }
  int distance(Vertex v) const noexcept { return reached(v) ? dist_[v] : kUnreached; }
  Vertex parent(Vertex v) const noexcept { return reached(v) ? parent_[v] : -1; }
  /// Vertices in visit order (non-decreasing distance).
  std::span<const Vertex> visited() const noexcept { return order_; }
  /// Source-to-`v` path following first-discovery parents.
  Path path_to(Vertex v) const;

  const Graph& graph() const noexcept { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
  std::uint32_t generation_ = 0;
};

/// Dense vertex-indexed distance table; `kUnreached` marks absent vertices.
using DistanceMap = std::vector<int>;

/// Whether a metric query must stay inside the patch's certified radius.
enum class Certify { kRequired, kUnchecked };

DistanceMap bfs_distances(const Graph& g, Vertex source, int cutoff = kNoCutoff);
/// Throws InvalidInput on unknown ids and CertificationError when
/// `certify == kRequired` and the cutoff reaches past the certified radius.
DistanceMap bfs_distances(const PlanarPatch& patch, Vertex source, int cutoff,
                          Certify certify = Certify::kRequired);

/// A vertex subset of a host graph, viewed as its induced subgraph.
class SubgraphHandle {
 public:
  SubgraphHandle() = default;
  SubgraphHandle(const Graph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(Vertex v) const noexcept { return member_[v] != 0; }
  bool connected() const noexcept { return connected_; }
  /// Members with at least one neighbor outside the subgraph.
  const std::vector<Vertex>& boundary() const noexcept { return boundary_; }
  bool on_boundary(Vertex v) const noexcept { return member_[v] == 2; }
  std::span<const std::uint8_t> membership() const noexcept { return member_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::uint8_t> member_;  // 0 outside, 1 interior, 2 boundary
  std::vector<Vertex> boundary_;
  bool connected_ = false;
};

/// Boundary of an arbitrary vertex set: members with a neighbor outside it.
std::vector<Vertex> boundary_of(const Graph& g, std::span<const Vertex> members);

SubgraphHandle ball(const PlanarPatch& patch, Vertex center, int r, Certify certify = Certify::kRequired);
SubgraphHandle ball(const Graph& g, Vertex center, int r);
std::vector<Vertex> sphere(const PlanarPatch& patch, Vertex center, int r,
                           Certify certify = Certify::kRequired);
std::vector<Vertex> sphere(const Graph& g, Vertex center, int r);

struct SeparationCertificate {
  /// Component of p in the graph minus the removed set, sorted.
  std::vector<Vertex> p_side;
};
struct AvoidingPath {
  Path path;
};
using SeparationResult = std::variant<SeparationCertificate, AvoidingPath>;

/// Decides whether `removed` separates p from q. The optional `region`
/// restricts the search to accepted vertices (p and q must be accepted).
/// Throws InvalidInput when p or q is removed.
SeparationResult is_separating(const Graph& g, std::span<const std::uint8_t> removed, Vertex p, Vertex q,
                               const std::function<bool(Vertex)>& region = {});
SeparationResult is_separating(const Graph& g, std::span<const Vertex> removed, Vertex p, Vertex q,
                               const std::function<bool(Vertex)>& region = {});

/// Re-scans a separation certificate: p inside, q outside, closed under
/// neighbors not removed (within the region).
bool verify_separation(const Graph& g, std::span<const std::uint8_t> removed, Vertex p, Vertex q,
                       const SeparationCertificate& cert, const std::function<bool(Vertex)>& region = {});

/// True when consecutive entries are adjacent and no vertex repeats.
bool is_simple_path(const Graph& g, const Path& path);
/// Removes loops from a walk, keeping its endpoints.
Path shortcut_walk(const Path& walk);

/// Exact distance between two vertices; kUnreached if disconnected.
int distance(const Graph& g, Vertex a, Vertex b);

}  // namespace qtree
