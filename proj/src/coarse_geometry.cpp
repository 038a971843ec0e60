#include "qtree/coarse_geometry.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <mutex>
#include <set>
#include <thread>

#include "qtree/errors.hpp"

namespace qtree {

Path GeodesicWithMidpoint::p_part() const {
  const std::size_t end = mid.kind == MidpointKind::kVertex ? static_cast<std::size_t>(dist / 2)
                                                            : static_cast<std::size_t>((dist - 1) / 2 + 1);
  return Path(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(end));
}

Path GeodesicWithMidpoint::q_part() const {
  const std::size_t begin = mid.kind == MidpointKind::kVertex ? static_cast<std::size_t>(dist / 2 + 1)
                                                              : static_cast<std::size_t>((dist + 1) / 2);
  Path out(path.begin() + static_cast<std::ptrdiff_t>(begin), path.end());
  std::reverse(out.begin(), out.end());
  return out;
}

GeodesicWithMidpoint geodesic_with_midpoint(const Graph& g, Vertex p, Vertex q,
                                            const std::function<bool(Vertex)>& allowed) {
  g.require_vertex(p);
  g.require_vertex(q);
  Bfs bfs(g);
  bfs.run(p, kNoCutoff, allowed);
  if (!bfs.reached(q)) {
    throw InvalidInput("vertices " + std::to_string(p) + " and " + std::to_string(q) + " are not connected");
  }
  GeodesicWithMidpoint out;
  out.p = p;
  out.q = q;
  out.dist = bfs.distance(q);
  out.path.push_back(q);
  for (Vertex cur = q; cur != p;) {
    Vertex best = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (bfs.distance(w) == bfs.distance(cur) - 1 && (best < 0 || w < best)) best = w;
    }
    cur = best;
    out.path.push_back(cur);
  }
  std::reverse(out.path.begin(), out.path.end());
  if (out.dist % 2 == 0) {
    out.mid = {MidpointKind::kVertex, out.path[out.dist / 2], -1};
  } else {
    out.mid = {MidpointKind::kEdge, out.path[(out.dist - 1) / 2], out.path[(out.dist + 1) / 2]};
  }
  return out;
}

std::optional<std::vector<Midpoint>> all_midpoints(const Graph& g, Vertex p, Vertex q, std::size_t cap,
                                                   const std::function<bool(Vertex)>& allowed) {
  Bfs from_p(g);
  Bfs from_q(g);
  from_p.run(p, kNoCutoff, allowed);
  from_q.run(q, kNoCutoff, allowed);
  if (!from_p.reached(q)) throw InvalidInput("vertices are not connected");
  const int d = from_p.distance(q);
  std::vector<Midpoint> out;
  const int half = d / 2;
  for (Vertex u : from_p.visited()) {
    if (from_p.distance(u) != half) continue;
    if (d % 2 == 0) {
      if (from_q.distance(u) == half) out.push_back({MidpointKind::kVertex, u, -1});
    } else {
      for (Vertex v : g.neighbors(u)) {
        if (from_q.distance(v) == half) out.push_back({MidpointKind::kEdge, u, v});
      }
    }
    if (out.size() > cap) return std::nullopt;
  }
  return out;
}

int midpoint_ball_radius(const Midpoint& m, int delta_doubled) {
  if (delta_doubled < 0) return -1;
  if (m.kind == MidpointKind::kVertex) return delta_doubled / 2;
  return delta_doubled >= 1 ? (delta_doubled - 1) / 2 : -1;
}

namespace {

std::vector<Vertex> midpoint_sources(const Midpoint& m) {
  if (m.kind == MidpointKind::kVertex) return {m.a};
  return {m.a, m.b};
}

}  // namespace

std::vector<Vertex> midpoint_ball(const Graph& g, const Midpoint& m, int delta_doubled) {
  const int radius = midpoint_ball_radius(m, delta_doubled);
  if (radius < 0) return {};
  Bfs bfs(g);
  bfs.run(midpoint_sources(m), radius);
  std::vector<Vertex> out(bfs.visited().begin(), bfs.visited().end());
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(BpOutcome o) {
  switch (o) {
    case BpOutcome::kSatisfied:
      return "satisfied";
    case BpOutcome::kViolatedCanonical:
      return "violated_canonical";
    case BpOutcome::kViolatedAll:
      return "violated_all";
    case BpOutcome::kSkipped:
      return "skipped";
  }
  return "?";
}

const char* to_string(MidpointKind k) { return k == MidpointKind::kVertex ? "vertex" : "edge"; }

namespace {

bool ball_certified(const PlanarPatch& patch, const Midpoint& m, int radius) {
  for (Vertex e : midpoint_sources(m)) {
    const int d = patch.center_distance(e);
    if (d < 0 || d + std::max(radius, 0) > patch.cert_radius() - 1) return false;
  }
  return true;
}

// Whether removing the midpoint ball disconnects p from q inside the region.
// Returns the avoiding path, or nullopt when separated.
std::optional<Path> avoiding_path(const PlanarPatch& patch, const Midpoint& m, int delta_doubled, Vertex p, Vertex q,
                                  std::vector<std::uint8_t>& mask) {
  const Graph& g = patch.graph();
  const auto ball = midpoint_ball(g, m, delta_doubled);
  for (Vertex v : ball) mask[v] = 1;
  std::optional<Path> out;
  if (!mask[p] && !mask[q]) {
    auto res = is_separating(g, std::span<const std::uint8_t>(mask), p, q,
                             [&patch](Vertex v) { return patch.in_search_region(v); });
    if (auto* path = std::get_if<AvoidingPath>(&res)) out = std::move(path->path);
  }
  for (Vertex v : ball) mask[v] = 0;
  return out;
}

BpPairResult skipped(BpPairResult r, std::string reason, bool strict) {
  if (strict) throw CertificationError("pair (" + std::to_string(r.p) + ", " + std::to_string(r.q) + "): " + reason);
  r.outcome = BpOutcome::kSkipped;
  r.skip_reason = std::move(reason);
  return r;
}

}  // namespace

BpPairResult check_bp_pair(const PlanarPatch& patch, Vertex p, Vertex q, int delta_doubled,
                           const BpOptions& options) {
  const Graph& g = patch.graph();
  g.require_vertex(p);
  g.require_vertex(q);
  if (delta_doubled < 0) throw InvalidInput("negative scale");
  BpPairResult r;
  r.p = p;
  r.q = q;
  r.delta_doubled = delta_doubled;
  if (!patch.in_search_region(p) || !patch.in_search_region(q)) {
    return skipped(std::move(r), "endpoint outside the search region", options.strict_margin);
  }
  r.geodesic = geodesic_with_midpoint(g, p, q);
  r.dist = r.geodesic.dist;
  for (Vertex v : r.geodesic.path) {
    if (!patch.in_search_region(v)) {
      return skipped(std::move(r), "geodesic leaves the search region", options.strict_margin);
    }
  }
  const Midpoint m = r.geodesic.mid;
  if (!ball_certified(patch, m, midpoint_ball_radius(m, delta_doubled))) {
    return skipped(std::move(r), "midpoint ball not certified", options.strict_margin);
  }

  std::vector<std::uint8_t> mask(g.vertex_count(), 0);
  auto path = avoiding_path(patch, m, delta_doubled, p, q, mask);
  if (!path) {
    r.outcome = BpOutcome::kSatisfied;
    return r;
  }
  r.avoiding = std::move(*path);
  r.outcome = BpOutcome::kViolatedCanonical;

  if (options.midpoint_cap > 0) {
    auto mids = all_midpoints(g, p, q, options.midpoint_cap);
    if (mids) {
      bool all = true;
      for (const Midpoint& other : *mids) {
        if (other == m) continue;
        const int rho = midpoint_ball_radius(other, delta_doubled);
        if (!ball_certified(patch, other, rho) || !avoiding_path(patch, other, delta_doubled, p, q, mask)) {
          all = false;
          break;
        }
      }
      if (all) r.outcome = BpOutcome::kViolatedAll;
    }
  }
  return r;
}

bool verify_violation(const Graph& g, const BpPairResult& result) {
  if (!result.violated()) return false;
  const auto& geo = result.geodesic;
  if (geo.p != result.p || geo.q != result.q) return false;
  if (!is_simple_path(g, geo.path) || geo.path.front() != result.p || geo.path.back() != result.q) return false;
  if (static_cast<int>(geo.path.size()) != geo.dist + 1 || distance(g, result.p, result.q) != geo.dist) return false;
  const bool vertex_mid = geo.dist % 2 == 0;
  if (vertex_mid != (geo.mid.kind == MidpointKind::kVertex)) return false;
  if (vertex_mid && geo.path[geo.dist / 2] != geo.mid.a) return false;
  if (!vertex_mid &&
      (geo.path[(geo.dist - 1) / 2] != geo.mid.a || geo.path[(geo.dist + 1) / 2] != geo.mid.b)) {
    return false;
  }
  const Path& avoid = result.avoiding;
  if (!is_simple_path(g, avoid) || avoid.front() != result.p || avoid.back() != result.q) return false;
  const auto ball = midpoint_ball(g, geo.mid, result.delta_doubled);
  for (Vertex v : avoid) {
    if (std::binary_search(ball.begin(), ball.end(), v)) return false;
  }
  return true;
}

std::size_t BpReport::count(BpOutcome o) const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [o](const BpPairResult& r) { return r.outcome == o; }));
}

std::vector<std::pair<Vertex, Vertex>> draw_pairs(const PlanarPatch& patch, const PairSource& source,
                                                  std::mt19937_64& rng) {
  const Graph& g = patch.graph();
  std::vector<Vertex> region;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (patch.in_search_region(v)) region.push_back(v);
  }
  const int cutoff = source.max_distance;
  auto in_range = [&](int d) { return d >= std::max(1, source.min_distance) && (cutoff < 0 || d <= cutoff); };
  std::set<std::pair<Vertex, Vertex>> out;
  Bfs bfs(g);
  if (source.kind == PairSource::Kind::kExhaustive) {
    for (Vertex p : region) {
      bfs.run(p, cutoff);
      for (Vertex q : bfs.visited()) {
        if (q > p && patch.in_search_region(q) && in_range(bfs.distance(q))) out.emplace(p, q);
      }
    }
    return {out.begin(), out.end()};
  }
  if (region.size() < 2) return {};
  std::vector<std::vector<Vertex>> buckets;
  const std::size_t attempts = source.count * 8 + 16;
  for (std::size_t t = 0; t < attempts && out.size() < source.count; ++t) {
    const Vertex p = region[rng() % region.size()];
    bfs.run(p, cutoff);
    buckets.clear();
    for (Vertex q : bfs.visited()) {
      const int d = bfs.distance(q);
      if (q == p || !patch.in_search_region(q) || !in_range(d)) continue;
      const auto j = static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(d)) - 1);
      if (buckets.size() <= j) buckets.resize(j + 1);
      buckets[j].push_back(q);
    }
    std::vector<std::size_t> nonempty;
    for (std::size_t j = 0; j < buckets.size(); ++j) {
      if (!buckets[j].empty()) nonempty.push_back(j);
    }
    if (nonempty.empty()) continue;
    const auto& bucket = buckets[nonempty[rng() % nonempty.size()]];
    const Vertex q = bucket[rng() % bucket.size()];
    out.emplace(std::min(p, q), std::max(p, q));
  }
  return {out.begin(), out.end()};
}

BpReport bp_scan(const PlanarPatch& patch, int delta_doubled, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                 const BpOptions& options, unsigned threads) {
  BpReport report;
  report.delta_doubled = delta_doubled;
  report.pairs.resize(pairs.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < pairs.size(); i += workers) {
        report.pairs[i] = check_bp_pair(patch, pairs[i].first, pairs[i].second, delta_doubled, options);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const BpPairResult& a, const BpPairResult& b) { return std::pair(a.p, a.q) < std::pair(b.p, b.q); });
  return report;
}

std::optional<int> least_clean_delta_doubled(const std::vector<BpReport>& reports) {
  std::optional<int> best;
  for (const auto& r : reports) {
    if (r.tested() == 0 || r.violations() > 0) continue;
    if (!best || r.delta_doubled < *best) best = r.delta_doubled;
  }
  return best;
}

void write_bp_csv(std::ostream& out, const std::vector<BpReport>& reports) {
  out << "pair_p,pair_q,dist,delta_doubled,outcome,midpoint_kind,path_len\n";
  for (const auto& report : reports) {
    for (const auto& r : report.pairs) {
      out << r.p << ',' << r.q << ',' << r.dist << ',' << r.delta_doubled << ',' << to_string(r.outcome) << ','
          << (r.geodesic.path.empty() ? "none" : to_string(r.geodesic.mid.kind)) << ','
          << (r.avoiding.empty() ? 0 : r.avoiding.size() - 1) << '\n';
    }
  }
}

}  // namespace qtree
