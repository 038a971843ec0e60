#pragma once

// Instance builders shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "qtree/generators.hpp"
#include "qtree/metric.hpp"
#include "qtree/witness.hpp"

namespace testing_instances {

using namespace qtree;

/// p_i back along Γ to p, then the avoiding path, then q back to q_i, with
/// loops removed. The input the cycle-space construction expects per layer.
inline Path layer_external_path(const WitnessCertificate& cert, const WitnessLayer& layer) {
  const Path& g = cert.geodesic.path;
  const auto pi = static_cast<std::size_t>(std::find(g.begin(), g.end(), layer.p_i) - g.begin());
  const auto qi = static_cast<std::size_t>(std::find(g.begin(), g.end(), layer.q_i) - g.begin());
  Path walk;
  for (std::size_t j = pi + 1; j-- > 0;) walk.push_back(g[j]);
  for (std::size_t j = 1; j + 1 < cert.avoiding.size(); ++j) walk.push_back(cert.avoiding[j]);
  for (std::size_t j = g.size(); j-- > qi;) walk.push_back(g[j]);
  return shortcut_walk(walk);
}

struct BoundaryInstance {
  SubgraphHandle h;
  Vertex x = -1;
  Vertex y = -1;
  Path external;
  bool annular = false;
};

/// H = B_c(i), or B_c(i) minus B_c(hole) when annular; x, y on the outer
/// sphere joined by a shortest path through the complement of H inside the
/// search region. nullopt when the draw gives no usable path.
/// With lattice coordinates, an annular draw blocks the part of the outside
/// that lies in the direction of the middle of the inner x-y path, so the
/// external path passes on the other side of the hole.
inline std::optional<BoundaryInstance> draw_boundary_instance(const PlanarPatch& patch, std::mt19937_64& rng,
                                                              bool annular, const LatticeCoords* coords = nullptr) {
  const Graph& g = patch.graph();
  std::uniform_int_distribution<int> radius(2, 15);
  const int i = radius(rng);
  const int room = patch.cert_radius() - i - 4;
  if (room < 0) return std::nullopt;
  const auto pool = ball(patch, patch.centers().front(), room).vertices();
  const Vertex c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  std::vector<Vertex> members = ball(g, c, i).vertices();
  BoundaryInstance inst;
  inst.annular = annular && i >= 3;
  if (inst.annular) {
    const int hole = std::uniform_int_distribution<int>(0, i - 2)(rng);
    const auto inner = ball(g, c, hole);
    std::erase_if(members, [&](Vertex v) { return inner.contains(v); });
  }
  inst.h = SubgraphHandle(g, members);
  const auto outer = sphere(g, c, i);
  std::uniform_int_distribution<std::size_t> pick(0, outer.size() - 1);
  inst.x = outer[pick(rng)];
  if (inst.annular) {
    // Far apart, so that the path through H and the external path tend to
    // pass on opposite sides of the hole.
    const auto dx = bfs_distances(g, inst.x, 2 * i + 1);
    inst.y = *std::max_element(outer.begin(), outer.end(), [&](Vertex a, Vertex b) { return dx[a] < dx[b]; });
  } else {
    do inst.y = outer[pick(rng)];
    while (inst.y == inst.x);
  }
  std::vector<std::uint8_t> removed(g.vertex_count(), 0);
  for (Vertex v : members) removed[v] = v != inst.x && v != inst.y;
  if (inst.annular && coords) {
    Bfs inner(g);
    inner.run(inst.x, kNoCutoff, [&](Vertex v) { return inst.h.contains(v); });
    const Path q = inner.path_to(inst.y);
    auto plane = [&](Vertex v) {
      const auto [a, b] = coords->of_vertex[v];
      return std::pair<double, double>{a + 0.5 * b, 0.8660254037844386 * b};
    };
    const auto [cx, cy] = plane(c);
    const auto [mx, my] = plane(q[q.size() / 2]);
    const double toward = std::atan2(my - cy, mx - cx);
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      if (inst.h.contains(v)) continue;
      const auto [vx, vy] = plane(v);
      double diff = std::abs(std::atan2(vy - cy, vx - cx) - toward);
      diff = std::min(diff, 2 * 3.141592653589793 - diff);
      if (diff < 0.5) removed[v] = 1;
    }
  }
  auto res = is_separating(g, removed, inst.x, inst.y, [&](Vertex v) { return patch.in_search_region(v); });
  if (!std::holds_alternative<AvoidingPath>(res)) return std::nullopt;
  inst.external = std::get<AvoidingPath>(res).path;
  if (inst.external.size() < 3) {
    // x and y adjacent: force a detour through a neighbour outside H.
    removed[inst.x] = removed[inst.y] = 0;
    std::optional<Path> detour;
    for (Vertex w : g.neighbors(inst.x)) {
      if (inst.h.contains(w) || !patch.in_search_region(w)) continue;
      removed[inst.x] = 1;
      auto rest = is_separating(g, removed, w, inst.y, [&](Vertex v) { return patch.in_search_region(v); });
      removed[inst.x] = 0;
      if (std::holds_alternative<AvoidingPath>(rest)) {
        Path p{inst.x};
        for (Vertex v : std::get<AvoidingPath>(rest).path) p.push_back(v);
        detour = p;
        break;
      }
    }
    if (!detour || detour->size() < 3) return std::nullopt;
    inst.external = *detour;
  }
  return inst;
}

}  // namespace testing_instances
