#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/metric.hpp"

namespace qtree {

/// Ball sizes |B_center(r)| for r = 0 .. sizes.size() - 1.
struct BallProfile {
  Vertex center = -1;
  std::vector<std::int64_t> sizes;

  int max_radius() const noexcept { return static_cast<int>(sizes.size()) - 1; }
};

BallProfile ball_profile(const Graph& g, Vertex center, int max_radius);
/// With `kRequired`, max_radius must be certified around the center.
BallProfile ball_profile(const PlanarPatch& patch, Vertex center, int max_radius,
                         Certify certify = Certify::kRequired);
/// Largest radius certified around v (negative if none).
int certified_radius(const PlanarPatch& patch, Vertex v);

/// Least-squares line through (log r, log |B(r)|) for integer r in the window.
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  int r_min = 0;
  int r_max = 0;
  std::size_t points = 0;
};

/// Throws InvalidInput when the window has fewer than two usable radii.
SlopeFit fit_loglog(const BallProfile& profile, int r_min, int r_max);

struct GrowthProfile {
  std::vector<BallProfile> profiles;
  std::vector<SlopeFit> fits;  // one per profile, window clipped to its radius
  int r_min = 0;
  int r_max = 0;
};

/// Profiles every center up to min(r_max, certified radius) and fits the
/// slope over [r_min, that radius]. Runs centers on `threads` workers; the
/// output order follows `centers`.
GrowthProfile growth_profile(const PlanarPatch& patch, const std::vector<Vertex>& centers, int r_min, int r_max,
                             unsigned threads = 1);

/// Draws n distinct vertices with center distance at most `max_center_distance`,
/// sorted. Takes every eligible vertex when fewer than n qualify.
std::vector<Vertex> sample_centers(const PlanarPatch& patch, std::size_t n, int max_center_distance,
                                   std::mt19937_64& rng);

}  // namespace qtree
