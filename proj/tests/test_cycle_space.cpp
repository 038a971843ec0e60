#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtree/cycle_space.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"

using namespace qtree;

namespace {

// Two triangles 0-1-2 and 0-2-3 sharing edge 0-2, plus a third triangle 4-5-6.
Graph two_triangles_and_one() {
  return Graph({{1, 2, 3}, {0, 2}, {0, 1, 3}, {0, 2}, {5, 6}, {4, 6}, {4, 5}});
}

// Figure eight: triangles 0-1-2 and 0-3-4 sharing vertex 0.
Graph figure_eight() { return Graph({{1, 2, 3, 4}, {0, 2}, {0, 1}, {0, 4}, {0, 3}}); }

EdgeSetF2 random_cycle_sum(const Graph& g, const CycleBasis& basis, std::mt19937_64& rng) {
  EdgeSetF2 x(g);
  for (const auto& c : basis.fundamental_cycles) {
    if (rng() & 1) x ^= c;
  }
  return x;
}

}  // namespace

TEST_SUITE("cycle_space") {

TEST_CASE("symmetric difference") {
  const Graph g = two_triangles_and_one();
  const auto t1 = EdgeSetF2::of_cycle(g, {0, 1, 2});
  const auto t2 = EdgeSetF2::of_cycle(g, {0, 2, 3});
  CHECK((t1 ^ t1).empty());
  const auto square = t1 ^ t2;
  CHECK(square == EdgeSetF2::of_cycle(g, {0, 1, 2, 3}));
  CHECK_FALSE(square.contains(*g.edge_between(0, 2)));
  CHECK(EdgeSetF2(g, {0, 0, 1}).edges() == std::vector<EdgeId>{1});
  const Graph other = figure_eight();
  EdgeSetF2 foreign = EdgeSetF2::of_cycle(other, {0, 1, 2});
  CHECK_THROWS_AS(t1 ^ foreign, InvalidInput);
}

TEST_CASE("cycle space membership") {
  const Graph g = two_triangles_and_one();
  CHECK_FALSE(is_cycle_space_element(EdgeSetF2(g, {0})));
  CHECK(is_cycle_space_element(EdgeSetF2::of_cycle(g, {0, 1, 2, 3})));
  CHECK(is_cycle_space_element(EdgeSetF2::of_cycle(g, {0, 1, 2}) ^ EdgeSetF2::of_cycle(g, {4, 5, 6})));
}

TEST_CASE("decomposition") {
  const Graph g = two_triangles_and_one();
  CHECK(decompose_into_cycles(EdgeSetF2::of_cycle(g, {0, 1, 2})) == std::vector<Path>{{0, 1, 2}});
  const auto two = EdgeSetF2::of_cycle(g, {4, 5, 6}) ^ EdgeSetF2::of_cycle(g, {0, 1, 2});
  CHECK(decompose_into_cycles(two) == std::vector<Path>{{0, 1, 2}, {4, 5, 6}});
  const Graph f8 = figure_eight();
  const auto eight = EdgeSetF2::of_cycle(f8, {0, 1, 2}) ^ EdgeSetF2::of_cycle(f8, {0, 3, 4});
  CHECK(decompose_into_cycles(eight) == std::vector<Path>{{0, 1, 2}, {0, 3, 4}});
  CHECK_THROWS_AS(decompose_into_cycles(EdgeSetF2(g, {0})), InvalidInput);
}

TEST_CASE("decomposition round trip on random cycle-space elements") {
  std::mt19937_64 rng(5);
  for (const auto& patch : {triangular_lattice(4), grid_patch(5, 5), cone_triangulation(1.5, 6)}) {
    const Graph& g = patch.graph();
    const CycleBasis basis = cycle_basis(g);
    for (int trial = 0; trial < 40; ++trial) {
      const EdgeSetF2 x = random_cycle_sum(g, basis, rng);
      const auto cycles = decompose_into_cycles(x);
      EdgeSetF2 back(g);
      std::size_t total = 0;
      for (const auto& c : cycles) {
        // Simple: no repeated vertex.
        std::vector<Vertex> s(c);
        std::sort(s.begin(), s.end());
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        const auto e = EdgeSetF2::of_cycle(g, c);
        total += e.size();
        back ^= e;
      }
      CHECK(back == x);
      CHECK(total == x.size());  // edge-disjoint
      CHECK(decompose_into_cycles(x) == cycles);
    }
  }
}

TEST_CASE("cycle through a path") {
  const Graph g = two_triangles_and_one();
  const auto square = EdgeSetF2::of_cycle(g, {0, 1, 2, 3});
  const Path c = extract_cycle_containing_path(square, {1, 2, 3});
  CHECK(c.size() == 4);
  CHECK(Path(c.begin(), c.begin() + 3) == Path{1, 2, 3});
  CHECK(EdgeSetF2::of_cycle(g, c) == square);
  const auto with_extra = square ^ EdgeSetF2::of_cycle(g, {4, 5, 6});
  CHECK(EdgeSetF2::of_cycle(g, extract_cycle_containing_path(with_extra, {1, 2, 3})) == square);
  CHECK_THROWS_AS(extract_cycle_containing_path(square, {0, 2}), InvalidInput);  // edge not in x
  CHECK_THROWS_AS(extract_cycle_containing_path(square, {1}), InvalidInput);     // no edge
  // Internal vertex 0 of path 1-0-2 meets x outside the path.
  const auto both = EdgeSetF2::of_cycle(g, {0, 1, 2}) ^ EdgeSetF2::of_cycle(g, {0, 2, 3});
  CHECK_THROWS_AS(extract_cycle_containing_path(both ^ EdgeSetF2(g, {*g.edge_between(0, 2)}), {1, 0, 3}),
                  InvalidInput);
}

TEST_CASE("cycle basis dimension") {
  for (const auto& patch : {triangular_lattice(5), grid_patch(4, 7), alpha_tree(1.5, 20), glued_trees(1.5, 16, 3).patch,
                            long_cycle_chain(9)}) {
    const Graph& g = patch.graph();
    const CycleBasis b = cycle_basis(g);
    CHECK(b.dimension() == g.edge_count() - g.vertex_count() + oracle::components(g));
    CHECK(b.tree_edges.size() + b.chord_edges.size() == g.edge_count());
    std::vector<std::vector<bool>> rows;
    for (const auto& c : b.fundamental_cycles) {
      CHECK(is_cycle_space_element(c));
      std::vector<bool> row(g.edge_count(), false);
      for (EdgeId e : c.edges()) row[e] = true;
      rows.push_back(row);
    }
    CHECK(oracle::f2_rank(rows) == b.dimension());
  }
}

TEST_CASE("span kernel agrees with elimination oracle") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t bits = 70 + trial;
    F2Span span(bits);
    std::vector<std::vector<bool>> rows;
    for (int i = 0; i < 40; ++i) {
      std::vector<EdgeId> ones;
      std::vector<bool> row(bits, false);
      for (std::size_t j = 0; j < bits; ++j) {
        if (rng() % 7 == 0) {
          ones.push_back(static_cast<EdgeId>(j));
          row[j] = true;
        }
      }
      const bool fresh = span.insert(ones);
      rows.push_back(row);
      CHECK(fresh == (oracle::f2_rank(rows) == span.rank()));
      CHECK(span.rank() == oracle::f2_rank(rows));
      CHECK(span.contains(ones));
    }
  }
}

TEST_CASE("short cycles match brute force") {
  for (const auto& patch : {triangular_lattice(2), grid_patch(4, 4), octahedron(), cone_triangulation(1.5, 3)}) {
    const Graph& g = patch.graph();
    for (int k = 3; k <= 6; ++k) {
      const auto mine = enumerate_short_cycles(g, k);
      std::set<std::vector<EdgeId>> as_sets;
      for (const auto& c : mine) {
        auto e = EdgeSetF2::of_cycle(g, c).edges();
        as_sets.insert(e);
      }
      CHECK(as_sets.size() == mine.size());
      CHECK(as_sets == oracle::short_cycles(g, k));
    }
  }
  CHECK_THROWS_AS(enumerate_short_cycles(triangular_lattice(3).graph(), 8, 50), CapacityError);
}

TEST_CASE("k-SC against the brute-force span oracle") {
  for (int n = 3; n <= 14; ++n) {
    const auto patch = cycle_patch(n);
    const Graph& g = patch.graph();
    for (int k = 3; k <= 15; ++k) {
      CHECK(is_k_sc(g, k) == (k >= n));
      if (k == n - 1 || k == n) CHECK(oracle::is_k_sc(g, k) == (k >= n));
    }
  }
  const Graph grid = grid_patch(5, 5).graph();
  CHECK_FALSE(is_k_sc(grid, 3));
  CHECK(is_k_sc(grid, 4));
  CHECK(oracle::is_k_sc(grid, 4));
  CHECK_FALSE(oracle::is_k_sc(grid, 3));
  CHECK(is_k_sc(triangular_lattice(4).graph(), 3));
  CHECK(oracle::is_k_sc(triangular_lattice(2).graph(), 3));
  CHECK(is_k_sc(octahedron().graph(), 3));
  CHECK(is_k_sc(alpha_tree(1.5, 10).graph(), 3));  // trivial cycle space
}

TEST_CASE("fundamental cycles of a triangulation are sums of facial triangles") {
  const auto patch = triangular_lattice(4);
  const Graph& g = patch.graph();
  F2Span span(g.edge_count());
  for (const auto& t : patch.facial_triangles()) span.insert(EdgeSetF2::of_cycle(g, {t[0], t[1], t[2]}).edges());
  for (const auto& c : cycle_basis(g).fundamental_cycles) CHECK(span.contains(c.edges()));
}

}
