#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qtree/coarse_geometry.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"

using namespace qtree;

namespace {

/// Path patch with room to spare so that every pair is testable.
PlanarPatch padded_cycle(int n) {
  const auto c = cycle_patch(n);
  return PlanarPatch(c.graph(), c.outer_dart(), {0}, n, false);
}

}  // namespace

TEST_SUITE("coarse_geometry") {

TEST_CASE("midpoints on paths") {
  const auto p5 = path_patch(5);
  const auto g5 = geodesic_with_midpoint(p5.graph(), 0, 4);
  CHECK(g5.dist == 4);
  CHECK(g5.mid == Midpoint{MidpointKind::kVertex, 2, -1});
  CHECK(g5.p_part() == Path{0, 1});
  CHECK(g5.q_part() == Path{4, 3});
  const auto p4 = path_patch(4);
  const auto g4 = geodesic_with_midpoint(p4.graph(), 0, 3);
  CHECK(g4.mid == Midpoint{MidpointKind::kEdge, 1, 2});
  CHECK(g4.p_part() == Path{0, 1});
  CHECK(g4.q_part() == Path{3, 2});
  const auto two = glued_trees(1.5, 8, 0);
  CHECK_THROWS_AS(geodesic_with_midpoint(two.patch.graph(), 0, two.mirror_of[0]), InvalidInput);
}

TEST_CASE("lattice midpoint through the center") {
  LatticeCoords lc;
  const auto lat = triangular_lattice(12, &lc);
  const auto g = geodesic_with_midpoint(lat.graph(), lc.find(-10, 0), lc.find(10, 0));
  CHECK(g.dist == 20);
  CHECK(g.path.size() == 21);
  CHECK(g.mid.kind == MidpointKind::kVertex);
  const auto all = all_midpoints(lat.graph(), lc.find(-10, 0), lc.find(10, 0), 100);
  REQUIRE(all.has_value());
  CHECK(std::find(all->begin(), all->end(), Midpoint{MidpointKind::kVertex, 0, -1}) != all->end());
  CHECK(std::find(all->begin(), all->end(), g.mid) != all->end());
  // Axis-aligned geodesic is unique in the lattice.
  CHECK(all->size() == 1);
  CHECK_FALSE(all_midpoints(lat.graph(), lc.find(-10, 5), lc.find(10, -5), 0).has_value());
}

TEST_CASE("geodesics are shortest paths and midpoints are central") {
  const auto cone = cone_triangulation(1.5, 12);
  const Graph& gr = cone.graph();
  const auto all = oracle::all_pairs(gr);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(gr.vertex_count()) - 1);
  for (int i = 0; i < 300; ++i) {
    const Vertex p = pick(rng), q = pick(rng);
    const auto g = geodesic_with_midpoint(gr, p, q);
    CHECK(g.dist == all[p][q]);
    CHECK(is_simple_path(gr, g.path));
    CHECK(g.path.front() == p);
    CHECK(g.path.back() == q);
    if (g.mid.kind == MidpointKind::kVertex) {
      CHECK(2 * all[p][g.mid.a] == g.dist);
      CHECK(2 * all[g.mid.a][q] == g.dist);
    } else {
      CHECK(2 * all[p][g.mid.a] + 1 == g.dist);
      CHECK(2 * all[g.mid.b][q] + 1 == g.dist);
    }
    const auto mids = all_midpoints(gr, p, q, 1000);
    REQUIRE(mids.has_value());
    for (const auto& m : *mids) {
      if (m.kind == MidpointKind::kVertex) CHECK(all[p][m.a] + all[m.a][q] == g.dist);
      else CHECK(all[p][m.a] + 1 + all[m.b][q] == g.dist);
    }
  }
}

TEST_CASE("midpoint balls") {
  const auto lat = triangular_lattice(6);
  CHECK(midpoint_ball(lat.graph(), Midpoint{MidpointKind::kVertex, 0, -1}, 0) == std::vector<Vertex>{0});
  CHECK(midpoint_ball(lat.graph(), Midpoint{MidpointKind::kVertex, 0, -1}, 4).size() == 19);
  CHECK(midpoint_ball(lat.graph(), Midpoint{MidpointKind::kEdge, 0, 1}, 1) == std::vector<Vertex>{0, 1});
  CHECK(midpoint_ball(lat.graph(), Midpoint{MidpointKind::kEdge, 0, 1}, 0).empty());
  CHECK(midpoint_ball_radius(Midpoint{MidpointKind::kVertex, 0, -1}, 5) == 2);
  CHECK(midpoint_ball_radius(Midpoint{MidpointKind::kEdge, 0, 1}, 5) == 2);
  CHECK(midpoint_ball_radius(Midpoint{MidpointKind::kEdge, 0, 1}, 0) == -1);
}

TEST_CASE("bottleneck property examples") {
  const auto tree = alpha_tree(1.5, 40);
  std::mt19937_64 rng(4);
  const auto pairs = draw_pairs(tree, PairSource{.count = 300}, rng);
  const auto rep = bp_scan(tree, 2, pairs);
  CHECK(rep.violations() == 0);
  CHECK(rep.tested() > 0);

  const auto c20 = padded_cycle(20);
  const auto res = check_bp_pair(c20, 0, 10, 2);
  CHECK(res.outcome == BpOutcome::kViolatedAll);
  CHECK(verify_violation(c20.graph(), res));

  LatticeCoords lc;
  const auto lat = triangular_lattice(30, &lc);
  const auto v = check_bp_pair(lat, lc.find(-10, 0), lc.find(10, 0), 10);
  CHECK(v.violated());
  CHECK(verify_violation(lat.graph(), v));
  const auto ball5 = midpoint_ball(lat.graph(), v.geodesic.mid, 10);
  for (Vertex x : v.avoiding) CHECK_FALSE(std::binary_search(ball5.begin(), ball5.end(), x));
}

TEST_CASE("margin rule") {
  const auto lat = triangular_lattice(10);
  LatticeCoords lc;
  triangular_lattice(10, &lc);
  const auto skipped = check_bp_pair(lat, lc.find(-10, 0), lc.find(5, 0), 2);
  CHECK(skipped.outcome == BpOutcome::kSkipped);
  CHECK_FALSE(skipped.skip_reason.empty());
  CHECK_THROWS_AS(check_bp_pair(lat, lc.find(-10, 0), lc.find(5, 0), 2, BpOptions{.strict_margin = true}),
                  CertificationError);
}

TEST_CASE("tampered violations are rejected") {
  LatticeCoords lc;
  const auto lat = triangular_lattice(30, &lc);
  auto v = check_bp_pair(lat, lc.find(-10, 0), lc.find(10, 0), 6);
  REQUIRE(v.violated());
  auto through = v;
  through.avoiding = v.geodesic.path;
  CHECK_FALSE(verify_violation(lat.graph(), through));
  auto broken = v;
  broken.avoiding.erase(broken.avoiding.begin() + 3);
  CHECK_FALSE(verify_violation(lat.graph(), broken));
  auto long_geo = v;
  long_geo.geodesic.path = v.avoiding;
  CHECK_FALSE(verify_violation(lat.graph(), long_geo));
}

TEST_CASE("pair drawing and scans") {
  const auto lat = triangular_lattice(8);
  std::mt19937_64 a(1), b(1);
  const auto pa = draw_pairs(lat, PairSource{.count = 200, .min_distance = 2}, a);
  CHECK(pa == draw_pairs(lat, PairSource{.count = 200, .min_distance = 2}, b));
  CHECK(std::is_sorted(pa.begin(), pa.end()));
  CHECK(std::adjacent_find(pa.begin(), pa.end()) == pa.end());
  for (auto [p, q] : pa) CHECK(distance(lat.graph(), p, q) >= 2);

  const auto ex = draw_pairs(lat, PairSource{.kind = PairSource::Kind::kExhaustive, .min_distance = 3, .max_distance = 3}, a);
  const auto region = ball(lat, 0, 7);
  std::size_t expect = 0;
  for (Vertex p : region.vertices())
    for (Vertex q : region.vertices())
      if (p < q && distance(lat.graph(), p, q) == 3) ++expect;
  CHECK(ex.size() == expect);

  const auto one = bp_scan(lat, 2, pa, {}, 1);
  const auto four = bp_scan(lat, 2, pa, {}, 4);
  REQUIRE(one.pairs.size() == four.pairs.size());
  for (std::size_t i = 0; i < one.pairs.size(); ++i) CHECK(one.pairs[i].outcome == four.pairs[i].outcome);
  for (const auto& r : one.pairs)
    if (r.violated()) CHECK(verify_violation(lat.graph(), r));

  std::ostringstream csv;
  write_bp_csv(csv, {one});
  CHECK(csv.str().rfind("pair_p,pair_q,dist,delta_doubled,outcome,midpoint_kind,path_len\n", 0) == 0);
}

TEST_CASE("least clean scale") {
  BpReport clean{.delta_doubled = 8};
  BpPairResult ok;
  ok.outcome = BpOutcome::kSatisfied;
  clean.pairs = {ok};
  BpReport dirty{.delta_doubled = 4};
  BpPairResult bad;
  bad.outcome = BpOutcome::kViolatedAll;
  dirty.pairs = {bad};
  BpReport empty{.delta_doubled = 2};
  CHECK(least_clean_delta_doubled({dirty, clean, empty}) == 8);
  CHECK_FALSE(least_clean_delta_doubled({dirty, empty}).has_value());
}

}
