#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

/// Builds a patch from a list of bounded triangular faces, each given
/// counter-clockwise. The rotation at every vertex is read off the triangles;
/// the outer dart defaults to the smallest dart that no triangle uses.
/// Throws EmbeddingError if the triangles do not form a plane disk system.
PlanarPatch build_from_triangles(std::size_t vertex_count, const std::vector<std::array<Vertex, 3>>& ccw_triangles,
                                 std::vector<Vertex> centers, int cert_radius,
                                 std::vector<std::string> provenance = {}, std::optional<Dart> outer = {});

struct Point {
  double x = 0;
  double y = 0;
};

/// Embeds a straight-line drawing: neighbors are sorted clockwise by angle
/// and the outer face is the face of most negative signed area.
PlanarPatch embed_by_coordinates(const std::vector<std::vector<Vertex>>& adjacency, const std::vector<Point>& coords,
                                 std::vector<Vertex> centers, int cert_radius, bool triangulation,
                                 std::vector<std::string> provenance = {});

/// Integer coordinates of generated lattice vertices, indexed by vertex id.
struct LatticeCoords {
  std::vector<std::array<int, 2>> of_vertex;
  std::map<std::array<int, 2>, Vertex> index;

  /// -1 when the point is not in the patch.
  Vertex find(int a, int b) const;
};

/// Hexagonal patch of the triangular lattice in axial coordinates (q, r):
/// all points with max(|q|, |r|, |q + r|) <= R. Vertex 0 is the center; ids
/// grow ring by ring. Certified to radius R.
PlanarPatch triangular_lattice(int radius, LatticeCoords* coords = nullptr);

/// Diamond |x| + |y| <= R of the square lattice, certified to radius R.
PlanarPatch square_lattice(int radius, LatticeCoords* coords = nullptr);

/// Free-standing small graphs used as fixtures.
PlanarPatch path_patch(int n);
PlanarPatch cycle_patch(int n);
/// rows x cols grid of vertices, id = row * cols + col.
PlanarPatch grid_patch(int rows, int cols);
PlanarPatch single_triangle();
/// Octahedron with one triangle designated as the outer face.
PlanarPatch octahedron();

/// Level sizes s(r) = max(1, round((r+1)^α - r^α)) for r >= 1, s(0) = 1.
std::vector<int> alpha_level_sizes(double alpha, int radius);

/// Spherically symmetric tree with level sizes `alpha_level_sizes`. Vertex
/// ids follow BFS order; each level spreads its children as evenly as
/// possible over the previous level. Throws InvalidInput unless 1 < α <= 3.
PlanarPatch alpha_tree(double alpha, int radius);

/// Concentric-cycle triangulation with level sizes max(3, s(r)). Each annulus
/// is triangulated by merging the two cycles at evenly spread positions.
PlanarPatch cone_triangulation(double alpha, int radius);
/// Same construction from explicit level sizes; sizes[0] is the root and must
/// be 1, the rest at least 3. Certified to radius sizes.size() - 1.
PlanarPatch cone_triangulation_from_sizes(const std::vector<int>& sizes, std::vector<std::string> provenance = {});

struct GluedTrees {
  PlanarPatch patch;
  /// Number of vertices of one tree; tree vertex t keeps id t in the patch.
  std::size_t tree_size = 0;
  /// Patch id of the mirror copy of tree vertex t.
  std::vector<Vertex> mirror_of;
  /// Tree ids of the identified leaves, in selection order.
  std::vector<Vertex> glued;
  /// Depth of each tree vertex.
  std::vector<int> depth;
  std::vector<Vertex> parent;
};

/// Two copies of alpha_tree(α, R) with up to `max_leaves` depth-R leaves
/// identified. Leaves are scanned in DFS order and the i-th accepted leaf
/// (i from 1) must be at tree distance >= 2^i from every earlier one.
/// Throws InvalidInput when `max_leaves >= 2` but fewer than 2 qualify.
GluedTrees glued_trees(double alpha, int radius, int max_leaves);

/// Wedge of the triangular lattice between two geodesic rays with level
/// widths round(√i), the two rays identified, so level i is a cycle. Levels
/// below 7 (where the cycle would have fewer than 3 vertices) are replaced by
/// a single apex joined to level 7. Certified to radius R from the apex.
PlanarPatch parabolic_cone(int radius);
/// Vertex at level i (>= 7) and position b (taken modulo the level width).
Vertex parabolic_cone_vertex(int level, int position);
inline int parabolic_cone_width(int level) { return static_cast<int>(std::lround(std::sqrt(static_cast<double>(level)))); }

struct SubdividedEdge {
  Vertex a = -1;
  Vertex b = -1;
  /// Subdivision vertices from a to b.
  std::vector<Vertex> interior;
};

struct GridBlock {
  int n = 0;
  /// Branch vertices of the (n+1) x (n+1) grid, id at x * (n + 1) + y.
  std::vector<Vertex> grid;
  std::vector<SubdividedEdge> edges;
  Vertex entry = -1;  // corner (0, 0)
  Vertex exit = -1;   // corner (n, 0)
};

struct GridChain {
  PlanarPatch patch;
  int n_max = 0;
  std::vector<GridBlock> blocks;  // blocks[n - 1] is G_n
  /// links[n - 1]: the path from G_n's exit to G_{n+1}'s entry, inclusive.
  std::vector<Path> links;
};

/// G_n is the (n+1) x (n+1) grid with every edge subdivided n times; the exit
/// corner of G_n is joined to the entry corner of G_{n+1} by a path of
/// length n. Centered at G_1's entry, certified up to G_{n_max}'s exit.
GridChain subdivided_grid_chain(int n_max);

/// Ray a_0 a_1 ... whose i-th edge (i >= 3) is replaced by a cycle of length
/// i through a_{i-1} and a_i; the first two edges stay single edges.
/// Centered at a_0, certified up to a_{n_max}.
PlanarPatch long_cycle_chain(int n_max);
/// Ids of the ray vertices a_0 .. a_{n_max}.
std::vector<Vertex> long_cycle_chain_spine(int n_max);

/// Flat description of a generator call; recorded as provenance lines.
struct GeneratorSpec {
  std::string family;  // lattice | square-lattice | alpha-tree | cone | glued-trees
                       // | parabolic-cone | grid-chain | long-cycle-chain
  double alpha = 1.5;
  int radius = 0;
  int n_max = 0;
  int max_leaves = 8;
  std::uint64_t seed = 0;

  std::vector<std::string> provenance() const;
};

/// Dispatches on the family tag; the patch carries the spec's provenance.
PlanarPatch generate(const GeneratorSpec& spec);
/// Reconstructs a spec from provenance lines written by `generate`.
std::optional<GeneratorSpec> spec_from_provenance(const PlanarPatch& patch);

}  // namespace qtree
