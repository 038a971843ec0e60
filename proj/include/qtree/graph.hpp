#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qtree {

using Vertex = std::int32_t;
using DartId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

/// A vertex sequence. Used for paths (consecutive entries adjacent) and for
/// cycles (closing edge implied, first vertex not repeated).
using Path = std::vector<Vertex>;

struct Dart {
  Vertex tail = -1;
  Vertex head = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Simple undirected graph in compressed adjacency form.
///
/// The neighbor sequence of a vertex is kept in the order it was supplied; for
/// plane graphs that order is the clockwise rotation. Every directed edge
/// ("dart") has a dense id equal to its slot in the flattened adjacency, so
/// dart `d` leaves `dart_tail(d)` towards `dart_head(d)`.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on asymmetric adjacency, self-loops, parallel edges,
  /// or out-of-range ids.
  explicit Graph(const std::vector<std::vector<Vertex>>& adjacency);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return heads_.size() / 2; }
  std::size_t dart_count() const noexcept { return heads_.size(); }

  bool has_vertex(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }
  void require_vertex(Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {heads_.data() + offsets_[v], heads_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }

  DartId first_dart(Vertex v) const noexcept { return offsets_[v]; }
  Vertex dart_tail(DartId d) const noexcept { return tails_[d]; }
  Vertex dart_head(DartId d) const noexcept { return heads_[d]; }
  DartId reverse(DartId d) const noexcept { return reverse_[d]; }
  EdgeId edge_of(DartId d) const noexcept { return edge_of_[d]; }

  /// Endpoints of an edge with `tail < head`.
  Dart edge_endpoints(EdgeId e) const noexcept { return edges_[e]; }

  std::optional<DartId> find_dart(Vertex u, Vertex v) const noexcept;
  bool adjacent(Vertex u, Vertex v) const noexcept { return find_dart(u, v).has_value(); }
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const noexcept;

  /// Per-vertex neighbor lists, in rotation order.
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// Connected component label per vertex; labels are dense, ordered by the
  /// smallest vertex of each component.
  std::vector<std::int32_t> component_labels() const;
  std::size_t component_count() const;

 private:
  std::vector<DartId> offsets_;
  std::vector<Vertex> heads_;
  std::vector<Vertex> tails_;
  std::vector<DartId> reverse_;
  std::vector<EdgeId> edge_of_;
  std::vector<Dart> edges_;
};

/// Faces of a rotation system.
///
/// The successor of dart (u, v) is (v, w) where w follows u in the clockwise
/// rotation at v. Bounded faces of a plane drawing are then traversed
/// counter-clockwise.
struct FaceStructure {
  std::vector<FaceId> face_of_dart;
  std::vector<std::vector<DartId>> faces;

  std::size_t face_count() const noexcept { return faces.size(); }
  std::size_t face_length(FaceId f) const noexcept { return faces[f].size(); }
  /// Vertex cycle of a face, starting at the tail of its first dart.
  Path face_vertices(const Graph& g, FaceId f) const;
};

DartId next_dart_in_face(const Graph& g, DartId d) noexcept;
FaceStructure trace_faces(const Graph& g);

/// Finite patch of a plane graph.
///
/// Besides the embedding it carries the certification contract: for every
/// center c and radius r <= cert_radius, the ball B_c(r) computed in the
/// patch equals the ball in the graph the patch stands for. More generally a
/// ball B_v(r) is certified when d(c, v) + r <= cert_radius for some center c.
class PlanarPatch {
 public:
  PlanarPatch() = default;

  /// Validates the graph invariants, the Euler relation per component, the
  /// outer dart and (when `triangulation` is set) the triangulation
  /// invariants. Throws InvalidInput / EmbeddingError.
  PlanarPatch(Graph graph, std::optional<Dart> outer, std::vector<Vertex> centers, int cert_radius,
              bool triangulation, std::vector<std::string> provenance = {});

  const Graph& graph() const noexcept { return graph_; }
  const FaceStructure& faces() const noexcept { return faces_; }
  std::optional<Dart> outer_dart() const noexcept { return outer_; }
  /// -1 when the patch has no edges.
  FaceId outer_face() const noexcept { return outer_face_; }

  const std::vector<Vertex>& centers() const noexcept { return centers_; }
  int cert_radius() const noexcept { return cert_radius_; }
  bool is_triangulation() const noexcept { return triangulation_; }
  /// Free-form `key=value` lines recorded by the generator.
  const std::vector<std::string>& provenance() const noexcept { return provenance_; }
  std::optional<std::string> provenance_value(const std::string& key) const;

  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

  /// Distance to the nearest center (-1 if unreachable from every center).
  int center_distance(Vertex v) const noexcept { return center_dist_[v]; }
  const std::vector<int>& center_distances() const noexcept { return center_dist_; }

  bool certified(Vertex v, int radius) const noexcept;
  /// Throws CertificationError unless `certified(v, radius)`.
  void require_certified(Vertex v, int radius) const;
  /// Vertices at distance <= cert_radius - 1 from a center.
  bool in_search_region(Vertex v) const noexcept {
    return center_dist_[v] >= 0 && center_dist_[v] <= cert_radius_ - 1;
  }

  /// Every bounded face as a vertex triple; the outer face is never included.
  std::vector<std::array<Vertex, 3>> facial_triangles() const;

 private:
  Graph graph_;
  FaceStructure faces_;
  std::optional<Dart> outer_;
  FaceId outer_face_ = -1;
  std::vector<Vertex> centers_;
  int cert_radius_ = 0;
  bool triangulation_ = false;
  std::vector<std::string> provenance_;
  std::vector<int> center_dist_;
};

}  // namespace qtree
