#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"
#include "qtree/graph.hpp"
#include "qtree/metric.hpp"

using namespace qtree;

TEST_SUITE("graph") {

TEST_CASE("adjacency validation") {
  CHECK_THROWS_AS(Graph({{1}, {}}), InvalidInput);         // asymmetric
  CHECK_THROWS_AS(Graph(std::vector<std::vector<Vertex>>{{0}}), InvalidInput);            // self-loop
  CHECK_THROWS_AS(Graph({{1, 1}, {0, 0}}), InvalidInput);  // parallel edge
  CHECK_THROWS_AS(Graph({{2}, {0}}), InvalidInput);        // out of range
  const Graph g({{1, 2}, {0, 2}, {0, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.dart_count() == 6);
  for (DartId d = 0; d < 6; ++d) {
    CHECK(g.reverse(g.reverse(d)) == d);
    CHECK(g.dart_tail(g.reverse(d)) == g.dart_head(d));
    CHECK(g.edge_of(d) == g.edge_of(g.reverse(d)));
  }
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.find_dart(0, 0).has_value());
  CHECK_THROWS_AS(g.require_vertex(3), InvalidInput);
}

TEST_CASE("handshake and Euler on every generator") {
  std::vector<PlanarPatch> patches;
  patches.push_back(triangular_lattice(6));
  patches.push_back(square_lattice(6));
  patches.push_back(alpha_tree(1.5, 40));
  patches.push_back(cone_triangulation(1.5, 30));
  patches.push_back(glued_trees(1.5, 32, 4).patch);
  patches.push_back(parabolic_cone(40));
  patches.push_back(subdivided_grid_chain(5).patch);
  patches.push_back(long_cycle_chain(12));
  patches.push_back(octahedron());
  patches.push_back(single_triangle());
  patches.push_back(grid_patch(4, 5));
  patches.push_back(cycle_patch(7));
  patches.push_back(path_patch(5));
  for (const auto& p : patches) {
    const Graph& g = p.graph();
    std::size_t deg = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) deg += g.degree(v);
    CHECK(deg == 2 * g.edge_count());
    std::vector<int> seen(g.dart_count(), 0);
    for (const auto& f : p.faces().faces)
      for (DartId d : f) ++seen[d];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    const auto c = static_cast<long long>(oracle::components(g));
    CHECK(static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
              static_cast<long long>(p.faces().face_count()) ==
          2 * c);
  }
}

TEST_CASE("facial triangles") {
  CHECK(single_triangle().facial_triangles().size() == 1);
  CHECK(single_triangle().faces().face_count() == 2);
  CHECK(octahedron().facial_triangles().size() == 7);
  const auto lat = triangular_lattice(5);
  for (FaceId f = 0; f < static_cast<FaceId>(lat.faces().face_count()); ++f) {
    if (f != lat.outer_face()) CHECK(lat.faces().face_length(f) == 3);
  }
  // Every internal edge lies in two facial triangles.
  const Graph& g = lat.graph();
  std::vector<int> count(g.edge_count(), 0);
  for (const auto& t : lat.facial_triangles())
    for (int i = 0; i < 3; ++i) ++count[*g.edge_between(t[i], t[(i + 1) % 3])];
  std::vector<char> outer(g.edge_count(), 0);
  for (DartId d : lat.faces().faces[lat.outer_face()]) outer[g.edge_of(d)] = 1;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) CHECK(count[e] == (outer[e] ? 1 : 2));
}

TEST_CASE("triangulation flag is checked") {
  const Graph g = grid_patch(3, 3).graph();
  CHECK_THROWS_AS(PlanarPatch(g, Dart{1, 0}, {4}, 1, true), InvalidInput);
  CHECK_THROWS_AS(PlanarPatch(g, Dart{0, 4}, {4}, 1, false), InvalidInput);  // not an edge
}

TEST_CASE("certification") {
  const auto lat = triangular_lattice(5);
  CHECK(lat.certified(0, 5));
  CHECK_FALSE(lat.certified(0, 6));
  CHECK(lat.certified(1, 4));
  CHECK_FALSE(lat.certified(1, 5));
  CHECK_THROWS_AS(lat.require_certified(0, 6), CertificationError);
  CHECK_THROWS_AS(bfs_distances(lat, 0, 6), CertificationError);
  CHECK_THROWS_AS(bfs_distances(lat, 0, kNoCutoff), CertificationError);
  CHECK_NOTHROW(bfs_distances(lat, 0, 6, Certify::kUnchecked));
  CHECK_THROWS_AS(ball(lat, 0, 6), CertificationError);
  CHECK(lat.in_search_region(0));
}

TEST_CASE("bfs distances") {
  const auto path = path_patch(4);
  const auto d = bfs_distances(path.graph(), 0, 3);
  CHECK(d == DistanceMap{0, 1, 2, 3});
  const auto d0 = bfs_distances(path.graph(), 2, 0);
  CHECK(d0 == DistanceMap{kUnreached, kUnreached, 0, kUnreached});
  const auto lat = triangular_lattice(4);
  const auto d2 = bfs_distances(lat, 0, 2);
  CHECK(std::count_if(d2.begin(), d2.end(), [](int x) { return x >= 0; }) == 19);
  CHECK_THROWS_AS(bfs_distances(path.graph(), 7, 1), InvalidInput);
}

TEST_CASE("bfs matches Floyd-Warshall and metric axioms") {
  std::vector<PlanarPatch> patches{triangular_lattice(4), cone_triangulation(1.5, 8), grid_patch(5, 6),
                                   long_cycle_chain(8), glued_trees(1.5, 16, 3).patch};
  std::mt19937_64 rng(11);
  for (const auto& p : patches) {
    const Graph& g = p.graph();
    const auto all = oracle::all_pairs(g);
    for (Vertex s = 0; s < static_cast<Vertex>(g.vertex_count()); ++s) {
      const auto d = bfs_distances(g, s);
      for (Vertex t = 0; t < static_cast<Vertex>(g.vertex_count()); ++t) {
        CHECK(d[t] == (all[s][t] >= oracle::kInf ? kUnreached : all[s][t]));
      }
    }
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count()) - 1);
    for (int i = 0; i < 200; ++i) {
      const Vertex x = pick(rng), y = pick(rng), z = pick(rng);
      CHECK(all[x][y] == all[y][x]);
      CHECK(all[x][z] <= all[x][y] + all[y][z]);
    }
  }
}

TEST_CASE("balls, spheres and boundaries") {
  const auto lat = triangular_lattice(12);
  CHECK(ball(lat, 0, 1).size() == 7);
  CHECK(ball(lat, 0, 10).size() == 331);
  for (int r = 1; r <= 10; ++r) {
    const auto b = ball(lat, 0, r);
    const auto inner = ball(lat, 0, r - 1);
    const auto s = sphere(lat, 0, r);
    CHECK(b.size() == inner.size() + s.size());
    for (Vertex v : inner.vertices()) CHECK(b.contains(v));
    for (Vertex v : b.boundary()) CHECK(std::binary_search(s.begin(), s.end(), v));
    CHECK(b.connected());
  }
  const auto tree = alpha_tree(1.5, 30);
  for (int r = 0; r <= 30; ++r) {
    std::size_t total = 0;
    for (int i = 0; i <= r; ++i) total += sphere(tree, 0, i).size();
    CHECK(ball(tree, 0, r).size() == total);
  }
  SubgraphHandle single(lat.graph(), {0});
  CHECK(single.boundary() == std::vector<Vertex>{0});
}

TEST_CASE("separation") {
  const auto path = path_patch(3);
  const std::vector<Vertex> mid{1};
  auto res = is_separating(path.graph(), std::span<const Vertex>(mid), 0, 2);
  REQUIRE(std::holds_alternative<SeparationCertificate>(res));
  std::vector<std::uint8_t> mask{0, 1, 0};
  CHECK(verify_separation(path.graph(), mask, 0, 2, std::get<SeparationCertificate>(res)));
  CHECK_THROWS_AS(is_separating(path.graph(), std::span<const Vertex>(mid), 1, 2), InvalidInput);

  const auto c6 = cycle_patch(6);
  const std::vector<Vertex> one{1};
  auto detour = is_separating(c6.graph(), std::span<const Vertex>(one), 0, 3);
  REQUIRE(std::holds_alternative<AvoidingPath>(detour));
  const Path& p = std::get<AvoidingPath>(detour).path;
  CHECK(p.size() == 4);
  CHECK(is_simple_path(c6.graph(), p));

  LatticeCoords lc;
  const auto lat = triangular_lattice(12, &lc);
  const auto b3 = ball(lat, 0, 3);
  auto around = is_separating(lat.graph(), std::span<const Vertex>(b3.vertices()), lc.find(-5, 0), lc.find(5, 0));
  REQUIRE(std::holds_alternative<AvoidingPath>(around));
  for (Vertex v : std::get<AvoidingPath>(around).path) CHECK_FALSE(b3.contains(v));
}

TEST_CASE("walk shortcutting") {
  CHECK(shortcut_walk({1, 2, 3, 2, 4}) == Path{1, 2, 4});
  CHECK(shortcut_walk({1, 2, 3, 1, 5}) == Path{1, 5});
  CHECK(shortcut_walk({4}) == Path{4});
}

}
