#include "qtree/metric.hpp"

#include <algorithm>
#include <unordered_map>

#include "qtree/errors.hpp"

namespace qtree {

Bfs::Bfs(const Graph& g)
    : g_(&g), stamp_(g.vertex_count(), 0), dist_(g.vertex_count(), 0), parent_(g.vertex_count(), -1) {}

void Bfs::run(std::span<const Vertex> sources, int cutoff, const std::function<bool(Vertex)>& allowed) {
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  order_.clear();
  for (Vertex s : sources) {
    g_->require_vertex(s);
    if (stamp_[s] == generation_) continue;
    stamp_[s] = generation_;
    dist_[s] = 0;
    parent_[s] = -1;
    order_.push_back(s);
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    if (cutoff >= 0 && dist_[v] >= cutoff) continue;
    for (Vertex w : g_->neighbors(v)) {
      if (stamp_[w] == generation_) continue;
      if (allowed && !allowed(w)) continue;
      stamp_[w] = generation_;
      dist_[w] = dist_[v] + 1;
      parent_[w] = v;
      order_.push_back(w);
    }
  }
}

Path Bfs::path_to(Vertex v) const {
  Path out;
  if (!reached(v)) return out;
  for (Vertex x = v; x >= 0; x = parent_[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

DistanceMap bfs_distances(const Graph& g, Vertex source, int cutoff) {
  g.require_vertex(source);
  Bfs bfs(g);
  bfs.run(source, cutoff);
  DistanceMap out(g.vertex_count(), kUnreached);
  for (Vertex v : bfs.visited()) out[v] = bfs.distance(v);
  return out;
}

DistanceMap bfs_distances(const PlanarPatch& patch, Vertex source, int cutoff, Certify certify) {
  patch.graph().require_vertex(source);
  if (certify == Certify::kRequired) {
    if (cutoff < 0) throw CertificationError("unbounded BFS cannot be certified");
    patch.require_certified(source, cutoff);
  }
  return bfs_distances(patch.graph(), source, cutoff);
}

SubgraphHandle::SubgraphHandle(const Graph& g, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), member_(g.vertex_count(), 0) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (Vertex v : vertices_) {
    g.require_vertex(v);
    member_[v] = 1;
  }
  for (Vertex v : vertices_) {
    for (Vertex w : g.neighbors(v)) {
      if (member_[w] == 0) {
        member_[v] = 2;
        boundary_.push_back(v);
        break;
      }
    }
  }
  if (vertices_.empty()) {
    connected_ = false;
    return;
  }
  Bfs bfs(g);
  bfs.run(vertices_.front(), kNoCutoff, [this](Vertex w) { return member_[w] != 0; });
  connected_ = bfs.visited().size() == vertices_.size();
}

std::vector<Vertex> boundary_of(const Graph& g, std::span<const Vertex> members) {
  SubgraphHandle h(g, std::vector<Vertex>(members.begin(), members.end()));
  return h.boundary();
}

SubgraphHandle ball(const Graph& g, Vertex center, int r) {
  g.require_vertex(center);
  if (r < 0) throw InvalidInput("negative ball radius");
  Bfs bfs(g);
  bfs.run(center, r);
  return SubgraphHandle(g, std::vector<Vertex>(bfs.visited().begin(), bfs.visited().end()));
}

SubgraphHandle ball(const PlanarPatch& patch, Vertex center, int r, Certify certify) {
  patch.graph().require_vertex(center);
  if (certify == Certify::kRequired) patch.require_certified(center, r);
  return ball(patch.graph(), center, r);
}

std::vector<Vertex> sphere(const Graph& g, Vertex center, int r) {
  g.require_vertex(center);
  if (r < 0) throw InvalidInput("negative sphere radius");
  Bfs bfs(g);
  bfs.run(center, r);
  std::vector<Vertex> out;
  for (Vertex v : bfs.visited()) {
    if (bfs.distance(v) == r) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> sphere(const PlanarPatch& patch, Vertex center, int r, Certify certify) {
  patch.graph().require_vertex(center);
  if (certify == Certify::kRequired) patch.require_certified(center, r);
  return sphere(patch.graph(), center, r);
}

SeparationResult is_separating(const Graph& g, std::span<const std::uint8_t> removed, Vertex p, Vertex q,
                               const std::function<bool(Vertex)>& region) {
  g.require_vertex(p);
  g.require_vertex(q);
  if (removed[p] || removed[q]) throw InvalidInput("separation query endpoint lies in the removed set");
  if (region && (!region(p) || !region(q))) throw InvalidInput("separation query endpoint outside region");
  Bfs bfs(g);
  bfs.run(p, kNoCutoff, [&](Vertex w) { return !removed[w] && (!region || region(w)); });
  if (bfs.reached(q)) return AvoidingPath{bfs.path_to(q)};
  std::vector<Vertex> side(bfs.visited().begin(), bfs.visited().end());
  std::sort(side.begin(), side.end());
  return SeparationCertificate{std::move(side)};
}

SeparationResult is_separating(const Graph& g, std::span<const Vertex> removed, Vertex p, Vertex q,
                               const std::function<bool(Vertex)>& region) {
  std::vector<std::uint8_t> mask(g.vertex_count(), 0);
  for (Vertex v : removed) {
    g.require_vertex(v);
    mask[v] = 1;
  }
  return is_separating(g, std::span<const std::uint8_t>(mask), p, q, region);
}

bool verify_separation(const Graph& g, std::span<const std::uint8_t> removed, Vertex p, Vertex q,
                       const SeparationCertificate& cert, const std::function<bool(Vertex)>& region) {
  const auto& side = cert.p_side;
  auto in_side = [&](Vertex v) { return std::binary_search(side.begin(), side.end(), v); };
  if (!in_side(p) || in_side(q)) return false;
  for (Vertex v : side) {
    if (removed[v]) return false;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w] || (region && !region(w))) continue;
      if (!in_side(w)) return false;
    }
  }
  return true;
}

bool is_simple_path(const Graph& g, const Path& path) {
  if (path.empty()) return false;
  std::vector<Vertex> sorted(path);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.has_vertex(path[i])) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

Path shortcut_walk(const Path& walk) {
  Path out;
  std::unordered_map<Vertex, std::size_t> position;
  for (Vertex v : walk) {
    if (auto it = position.find(v); it != position.end()) {
      for (std::size_t i = it->second + 1; i < out.size(); ++i) position.erase(out[i]);
      out.resize(it->second + 1);
      continue;
    }
    position[v] = out.size();
    out.push_back(v);
  }
  return out;
}

int distance(const Graph& g, Vertex a, Vertex b) {
  g.require_vertex(a);
  g.require_vertex(b);
  Bfs bfs(g);
  bfs.run(a);
  return bfs.distance(b);
}

}  // namespace qtree
