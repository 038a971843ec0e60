#include "qtree/growth.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qtree/errors.hpp"

namespace qtree {

BallProfile ball_profile(const Graph& g, Vertex center, int max_radius) {
  g.require_vertex(center);
  if (max_radius < 0) throw InvalidInput("negative profile radius");
  Bfs bfs(g);
  bfs.run(center, max_radius);
  BallProfile out{center, std::vector<std::int64_t>(static_cast<std::size_t>(max_radius) + 1, 0)};
  for (Vertex v : bfs.visited()) ++out.sizes[bfs.distance(v)];
  for (std::size_t r = 1; r < out.sizes.size(); ++r) out.sizes[r] += out.sizes[r - 1];
  return out;
}

BallProfile ball_profile(const PlanarPatch& patch, Vertex center, int max_radius, Certify certify) {
  patch.graph().require_vertex(center);
  if (certify == Certify::kRequired) patch.require_certified(center, max_radius);
  return ball_profile(patch.graph(), center, max_radius);
}

int certified_radius(const PlanarPatch& patch, Vertex v) {
  patch.graph().require_vertex(v);
  const int d = patch.center_distance(v);
  return d < 0 ? -1 : patch.cert_radius() - d;
}

SlopeFit fit_loglog(const BallProfile& profile, int r_min, int r_max) {
  SlopeFit fit;
  fit.r_min = std::max(r_min, 1);
  fit.r_max = std::min(r_max, profile.max_radius());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int r = fit.r_min; r <= fit.r_max; ++r) {
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(static_cast<double>(profile.sizes[r]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.points;
  }
  if (fit.points < 2) throw InvalidInput("slope fit needs at least two radii in the window");
  const double n = static_cast<double>(fit.points);
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

GrowthProfile growth_profile(const PlanarPatch& patch, const std::vector<Vertex>& centers, int r_min, int r_max,
                             unsigned threads) {
  GrowthProfile out;
  out.r_min = r_min;
  out.r_max = r_max;
  out.profiles.resize(centers.size());
  out.fits.resize(centers.size());
  for (Vertex c : centers) {
    if (certified_radius(patch, c) < std::max(r_min, 1) + 1) {
      throw CertificationError("center " + std::to_string(c) + " has certified radius " +
                               std::to_string(certified_radius(patch, c)) + ", below the fit window");
    }
  }
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(centers.size())));
  auto work = [&](unsigned id) {
    Bfs bfs(patch.graph());
    for (std::size_t i = id; i < centers.size(); i += workers) {
      const int radius = std::min(r_max, certified_radius(patch, centers[i]));
      bfs.run(centers[i], radius);
      BallProfile prof{centers[i], std::vector<std::int64_t>(static_cast<std::size_t>(radius) + 1, 0)};
      for (Vertex v : bfs.visited()) ++prof.sizes[bfs.distance(v)];
      for (std::size_t r = 1; r < prof.sizes.size(); ++r) prof.sizes[r] += prof.sizes[r - 1];
      out.fits[i] = fit_loglog(prof, r_min, radius);
      out.profiles[i] = std::move(prof);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Vertex> sample_centers(const PlanarPatch& patch, std::size_t n, int max_center_distance,
                                   std::mt19937_64& rng) {
  std::vector<Vertex> eligible;
  for (Vertex v = 0; v < static_cast<Vertex>(patch.vertex_count()); ++v) {
    const int d = patch.center_distance(v);
    if (d >= 0 && d <= max_center_distance) eligible.push_back(v);
  }
  if (eligible.size() > n) {
    // Partial Fisher-Yates with explicit draws keeps results identical across
    // standard library implementations.
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (eligible.size() - i));
      std::swap(eligible[i], eligible[j]);
    }
    eligible.resize(n);
  }
  std::sort(eligible.begin(), eligible.end());
  return eligible;
}

}  // namespace qtree
