#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qtree/cycle_space.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"
#include "qtree/growth.hpp"
#include "qtree/metric.hpp"
#include "qtree/patch_io.hpp"

using namespace qtree;

TEST_SUITE("generators") {

TEST_CASE("triangular lattice") {
  CHECK(triangular_lattice(1).vertex_count() == 7);
  CHECK(triangular_lattice(2).vertex_count() == 19);
  const auto lat = triangular_lattice(12);
  const auto d = oracle::distances_from(lat.graph(), 0);
  for (int r = 0; r <= 12; ++r) CHECK(oracle::ball_size(d, r) == 3 * r * r + 3 * r + 1);
  for (Vertex v = 0; v < static_cast<Vertex>(lat.vertex_count()); ++v) {
    if (d[v] <= 11) CHECK(lat.graph().degree(v) == 6);
  }
  CHECK(lat.is_triangulation());
}

TEST_CASE("square lattice") {
  const auto sq = square_lattice(10);
  const auto d = oracle::distances_from(sq.graph(), 0);
  for (int r = 0; r <= 10; ++r) CHECK(oracle::ball_size(d, r) == 2 * r * r + 2 * r + 1);
  CHECK(is_k_sc(square_lattice(4).graph(), 4));
}

TEST_CASE("alpha level sizes and trees") {
  const auto s = alpha_level_sizes(1.5, 10);
  CHECK(s[0] == 1);
  for (int r = 1; r <= 10; ++r) {
    CHECK(s[r] == std::max(1L, std::lround(std::pow(r + 1, 1.5) - std::pow(r, 1.5))));
  }
  const auto nearly_path = alpha_tree(1.01, 30);
  const auto dp = oracle::distances_from(nearly_path.graph(), 0);
  for (int r = 0; r <= 30; ++r) CHECK(oracle::ball_size(dp, r) == r + 1);

  const auto t2 = alpha_tree(2.0, 64);
  const auto d2 = oracle::distances_from(t2.graph(), 0);
  for (int r = 8; r <= 64; ++r) {
    const double b = static_cast<double>(oracle::ball_size(d2, r));
    CHECK(b >= r * r / 2.0);
    CHECK(b <= 2.0 * r * r);
  }
  const auto t = alpha_tree(1.5, 40);
  CHECK(t.graph().edge_count() + 1 == t.vertex_count());
  const auto sizes = alpha_level_sizes(1.5, 40);
  const auto dt = oracle::distances_from(t.graph(), 0);
  std::int64_t total = 0;
  for (int r = 0; r <= 40; ++r) {
    total += sizes[r];
    CHECK(oracle::ball_size(dt, r) == total);
  }
  CHECK_THROWS_AS(alpha_tree(1.0, 10), InvalidInput);
  CHECK_THROWS_AS(alpha_tree(3.5, 10), InvalidInput);
}

TEST_CASE("cone triangulation with 6r levels is the lattice") {
  for (int R = 1; R <= 6; ++R) {
    std::vector<int> sizes{1};
    for (int r = 1; r <= R; ++r) sizes.push_back(6 * r);
    const auto cone = cone_triangulation_from_sizes(sizes);
    CHECK(cone.is_triangulation());
    CHECK(oracle::rotation_isomorphic(cone.graph(), triangular_lattice(R).graph()));
  }
  std::vector<int> odd{1, 5, 11};
  CHECK_FALSE(oracle::rotation_isomorphic(cone_triangulation_from_sizes(odd).graph(), triangular_lattice(2).graph()));
}

TEST_CASE("cone triangulation growth") {
  const auto cone = cone_triangulation(1.5, 128);
  CHECK(cone.is_triangulation());
  const auto prof = ball_profile(cone, 0, 128);
  const double slope = fit_loglog(prof, 16, 128).slope;
  CHECK(slope >= 1.3);
  CHECK(slope <= 1.7);
  CHECK_THROWS_AS(cone_triangulation(3.0, 10), InvalidInput);
}

TEST_CASE("glued trees") {
  const auto none = glued_trees(1.5, 32, 0);
  CHECK(none.glued.empty());
  CHECK(oracle::components(none.patch.graph()) == 2);

  const auto gt = glued_trees(1.5, 64, 6);
  REQUIRE(gt.glued.size() >= 2);
  const Graph& g = gt.patch.graph();
  for (std::size_t i = 0; i < gt.glued.size(); ++i) {
    CHECK(gt.mirror_of[gt.glued[i]] == gt.glued[i]);
    CHECK(gt.depth[gt.glued[i]] == 64);
  }
  // Spacing rule measured in one tree: distance via depths and common ancestor.
  auto tree_distance = [&](Vertex a, Vertex b) {
    int d = 0;
    while (a != b) {
      if (gt.depth[a] >= gt.depth[b]) a = gt.parent[a];
      else b = gt.parent[b];
      ++d;
    }
    return d;
  };
  for (std::size_t i = 1; i < gt.glued.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(tree_distance(gt.glued[i], gt.glued[j]) >= (1 << i));

  // Two glued leaves at tree distance D close a cycle of length 2D through both copies.
  const Vertex u = gt.glued[0], w = gt.glued[1];
  const int D = tree_distance(u, w);
  std::vector<std::uint8_t> cut(g.vertex_count(), 0);
  cut[gt.parent[u]] = 1;  // force the walk from u to leave through the mirror side
  Bfs bfs(g);
  bfs.run(u, kNoCutoff, [&](Vertex v) { return !cut[v]; });
  CHECK(bfs.distance(w) == D);
  CHECK(distance(g, u, w) == D);

  // |B^G_v(r)| <= 2 max |B^T(r)|.
  const auto tree = alpha_tree(1.5, 64);
  std::vector<std::int64_t> tree_max(65, 0);
  for (Vertex v = 0; v < static_cast<Vertex>(tree.vertex_count()); ++v) {
    const auto d = oracle::queue_distances(tree.graph(), v);
    for (int r = 0; r <= 64; ++r) tree_max[r] = std::max(tree_max[r], oracle::ball_size(d, r));
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); v += 97) {
    const auto d = oracle::queue_distances(g, v);
    for (int r = 0; r <= 64; r += 8) CHECK(oracle::ball_size(d, r) <= 2 * tree_max[r]);
  }
  CHECK_THROWS_AS(glued_trees(1.01, 10, 4), InvalidInput);  // a path has one leaf
}

TEST_CASE("parabolic cone") {
  const auto pc = parabolic_cone(400);
  const auto apex = ball_profile(pc, 0, 400);
  CHECK(fit_loglog(apex, 16, 400).slope < 1.8);
  const Vertex deep = parabolic_cone_vertex(300, parabolic_cone_width(300) / 2);
  CHECK(pc.certified(deep, 20));
  // Identification: position 0 and position width are the same vertex.
  CHECK(parabolic_cone_vertex(100, 0) == parabolic_cone_vertex(100, parabolic_cone_width(100)));
  CHECK(parabolic_cone_width(100) == 10);
  const auto d = oracle::distances_from(pc.graph(), 0);
  for (int level = 7; level <= 390; level += 37) {
    for (int b = 0; b < parabolic_cone_width(level); ++b) CHECK(d[parabolic_cone_vertex(level, b)] == level - 6);
  }
}

TEST_CASE("grid chain") {
  const auto gc = subdivided_grid_chain(6);
  CHECK(gc.blocks[1].grid.size() + 2 * gc.blocks[1].edges.size() == 33);
  CHECK(oracle::components(gc.patch.graph()) == 1);
  const Graph& g = gc.patch.graph();
  for (const auto& blk : gc.blocks) {
    const int n = blk.n;
    CHECK(blk.grid.size() == static_cast<std::size_t>((n + 1) * (n + 1)));
    CHECK(blk.edges.size() == static_cast<std::size_t>(2 * n * (n + 1)));
    for (const auto& e : blk.edges) CHECK(e.interior.size() == static_cast<std::size_t>(n));
    // Grid distances scale by the subdivision step.
    const auto d = oracle::distances_from(g, blk.grid[0]);
    CHECK(d[blk.grid[n * (n + 1) + n]] == 2 * n * (n + 1));
  }
  for (std::size_t i = 0; i < gc.links.size(); ++i) {
    CHECK(gc.links[i].size() == i + 2);  // length n = i + 1
    CHECK(gc.links[i].front() == gc.blocks[i].exit);
    CHECK(gc.links[i].back() == gc.blocks[i + 1].entry);
  }
  CHECK_THROWS_AS(subdivided_grid_chain(0), InvalidInput);
}

TEST_CASE("long cycle chain has linear growth") {
  const auto lcc = long_cycle_chain(30);
  const Graph& g = lcc.graph();
  const auto spine = long_cycle_chain_spine(30);
  for (std::size_t i = 1; i < spine.size(); ++i) {
    CHECK(distance(g, spine[i - 1], spine[i]) == static_cast<int>(i >= 3 ? i / 2 : 1));
  }
  int worst = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    const auto d = oracle::distances_from(g, v);
    for (int r = 1; r <= 40; ++r) {
      worst = std::max<int>(worst, static_cast<int>(oracle::ball_size(d, r) - 4 * r));
    }
  }
  CHECK(worst <= 1);  // |B_v(r)| <= 4r + 1
}

TEST_CASE("determinism and provenance") {
  GeneratorSpec spec{.family = "alpha-tree", .alpha = 1.5, .radius = 64, .seed = 7};
  CHECK(patch_to_string(generate(spec)) == patch_to_string(generate(spec)));
  const auto back = spec_from_provenance(generate(spec));
  REQUIRE(back.has_value());
  CHECK(back->family == "alpha-tree");
  CHECK(back->radius == 64);
  CHECK(back->seed == 7);
  CHECK_THROWS_AS(generate(GeneratorSpec{.family = "nope"}), InvalidInput);
}

TEST_CASE("certification audit: regenerate larger and compare balls") {
  const auto small = triangular_lattice(8);
  const auto big = triangular_lattice(12);
  for (int r = 0; r <= 8; ++r) CHECK(ball(small, 0, r).size() == ball(big, 0, r).size());
  const auto c1 = cone_triangulation(1.5, 20);
  const auto c2 = cone_triangulation(1.5, 30);
  for (int r = 0; r <= 20; ++r) CHECK(ball(c1, 0, r).size() == ball(c2, 0, r).size());
  const auto p1 = parabolic_cone(60);
  const auto p2 = parabolic_cone(90);
  for (int r = 0; r <= 60; ++r) CHECK(ball(p1, 0, r).size() == ball(p2, 0, r).size());
  const auto a1 = alpha_tree(1.5, 40);
  const auto a2 = alpha_tree(1.5, 60);
  for (int r = 0; r <= 40; ++r) CHECK(ball(a1, 0, r).size() == ball(a2, 0, r).size());
}

}
