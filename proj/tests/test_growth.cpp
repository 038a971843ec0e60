#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qtree/errors.hpp"
#include "qtree/generators.hpp"
#include "qtree/growth.hpp"

using namespace qtree;

TEST_SUITE("growth") {

TEST_CASE("ball profile matches the oracle") {
  const auto cone = cone_triangulation(1.5, 40);
  const auto prof = ball_profile(cone, 0, 40);
  const auto d = oracle::distances_from(cone.graph(), 0);
  REQUIRE(prof.max_radius() == 40);
  for (int r = 0; r <= 40; ++r) CHECK(prof.sizes[r] == oracle::ball_size(d, r));
  CHECK_THROWS_AS(ball_profile(cone, 0, 41), CertificationError);
  CHECK(certified_radius(cone, 0) == 40);
}

TEST_CASE("log-log fit recovers exact power laws") {
  BallProfile p;
  for (int r = 0; r <= 100; ++r) p.sizes.push_back(static_cast<std::int64_t>(std::llround(5.0 * std::pow(r, 2.0))));
  const auto fit = fit_loglog(p, 10, 100);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(std::exp(fit.intercept) == doctest::Approx(5.0).epsilon(1e-2));
  CHECK(fit.points == 91);
  CHECK_THROWS_AS(fit_loglog(p, 50, 50), InvalidInput);
}

TEST_CASE("lattice slope") {
  const auto lat = triangular_lattice(60);
  const auto fit = fit_loglog(ball_profile(lat, 0, 60), 8, 60);
  CHECK(fit.slope >= 1.95);
  CHECK(fit.slope <= 2.05);
}

TEST_CASE("growth profile is thread-count independent") {
  const auto tree = alpha_tree(1.5, 64);
  std::mt19937_64 rng(3);
  const auto centers = sample_centers(tree, 12, 32, rng);
  CHECK(centers.size() == 12);
  CHECK(std::is_sorted(centers.begin(), centers.end()));
  for (Vertex c : centers) CHECK(tree.center_distance(c) <= 32);
  const auto one = growth_profile(tree, centers, 4, 64, 1);
  const auto four = growth_profile(tree, centers, 4, 64, 4);
  REQUIRE(one.profiles.size() == centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    CHECK(one.profiles[i].sizes == four.profiles[i].sizes);
    CHECK(one.fits[i].slope == four.fits[i].slope);
    CHECK(one.profiles[i].max_radius() == 64 - tree.center_distance(centers[i]));
  }
  std::mt19937_64 small(1);
  CHECK(sample_centers(tree, 1000000, 2, small).size() == static_cast<std::size_t>(ball(tree, 0, 2).size()));
}

TEST_CASE("long cycle chain and parabolic cone slopes") {
  const auto lcc = long_cycle_chain(60);
  CHECK(fit_loglog(ball_profile(lcc, 0, 60), 8, 60).slope <= 1.1);
  const auto pc = parabolic_cone(1200);
  CHECK(fit_loglog(ball_profile(pc, 0, 1200), 16, 1200).slope <= 1.8);
  const Vertex deep = parabolic_cone_vertex(600, parabolic_cone_width(600) / 2);
  const int r = parabolic_cone_width(600) / 2 - 1;
  CHECK(fit_loglog(ball_profile(pc, deep, r), 2, r).slope >= 1.6);
}

}
