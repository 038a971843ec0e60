#include "qtree/witness.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qtree/errors.hpp"

namespace qtree {

std::optional<Path> boundary_path_bfs(const Graph& g, const SubgraphHandle& h, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (!h.on_boundary(x) || !h.on_boundary(y)) throw InvalidInput("boundary path endpoints must lie in the boundary");
  if (x == y) return Path{x};
  Bfs bfs(g);
  bfs.run(x, kNoCutoff, [&h](Vertex v) { return h.on_boundary(v); });
  if (!bfs.reached(y)) return std::nullopt;
  return bfs.path_to(y);
}

namespace {

template <typename Seq>
std::string join_limited(const Seq& seq, std::size_t limit = 200) {
  std::ostringstream out;
  std::size_t n = 0;
  for (const auto& v : seq) {
    if (n == limit) {
      out << " ...(" << seq.size() << " total)";
      break;
    }
    out << (n++ ? " " : "") << v;
  }
  return out.str();
}

std::string dump(const CycleSpaceTrace& t) {
  std::ostringstream out;
  out << "\n  C: " << join_limited(t.cycle) << "\n  T:";
  std::size_t n = 0;
  for (const auto& tri : t.triangles) {
    if (n++ == 100) {
      out << " ...";
      break;
    }
    out << " (" << tri[0] << ',' << tri[1] << ',' << tri[2] << ')';
  }
  out << "\n  K edges:";
  if (t.sum.host()) {
    n = 0;
    for (EdgeId e : t.sum.edges()) {
      if (n++ == 200) {
        out << " ...";
        break;
      }
      const Dart d = t.sum.host()->edge_endpoints(e);
      out << ' ' << d.tail << '-' << d.head;
    }
  }
  return out.str();
}

}  // namespace

Path boundary_path_cyclespace(const PlanarPatch& patch, const SubgraphHandle& h, Vertex x, Vertex y,
                              const Path& external, CycleSpaceTrace* trace) {
  const Graph& g = patch.graph();
  g.require_vertex(x);
  g.require_vertex(y);
  if (!h.contains(x) || !h.contains(y)) throw InvalidInput("x and y must lie in H");
  if (x == y) return Path{x};
  if (!patch.is_triangulation()) throw InvalidInput("the cycle-space construction needs a triangulation patch");
  if (!h.connected()) throw InvalidInput("H must be connected");
  if (external.size() < 3 || external.front() != x || external.back() != y || !is_simple_path(g, external)) {
    throw InvalidInput("external path must be a simple x-y path with an internal vertex");
  }
  for (std::size_t i = 1; i + 1 < external.size(); ++i) {
    if (h.contains(external[i])) throw InvalidInput("external path enters H");
  }
  for (Vertex v : h.vertices()) {
    if (!patch.in_search_region(v)) throw CertificationError("H reaches outside the search region");
  }
  for (Vertex v : external) {
    if (!patch.in_search_region(v)) throw CertificationError("external path leaves the search region");
  }

  CycleSpaceTrace local;
  CycleSpaceTrace& t = trace ? *trace : local;
  t = CycleSpaceTrace{};

  Bfs bfs(g);
  bfs.run(x, kNoCutoff, [&h](Vertex v) { return h.contains(v); });
  t.inner = bfs.path_to(y);
  t.cycle = external;
  for (std::size_t i = t.inner.size() - 2; i >= 1; --i) t.cycle.push_back(t.inner[i]);

  const EdgeSetF2 c_edges = EdgeSetF2::of_cycle(g, t.cycle);
  std::vector<std::uint8_t> on_cycle(g.edge_count(), 0);
  for (EdgeId e : c_edges.edges()) on_cycle[e] = 1;

  // Faces reachable from the outer face without crossing C; the rest form
  // the bounded side A.
  const FaceStructure& fs = patch.faces();
  std::vector<std::uint8_t> outer_side(fs.face_count(), 0);
  std::vector<FaceId> queue{patch.outer_face()};
  outer_side[patch.outer_face()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (DartId d : fs.faces[queue[head]]) {
      if (on_cycle[g.edge_of(d)]) continue;
      const FaceId nf = fs.face_of_dart[g.reverse(d)];
      if (!outer_side[nf]) {
        outer_side[nf] = 1;
        queue.push_back(nf);
      }
    }
  }

  std::vector<EdgeId> sum_ids(c_edges.edges().begin(), c_edges.edges().end());
  for (FaceId f = 0; f < static_cast<FaceId>(fs.face_count()); ++f) {
    if (outer_side[f]) continue;
    if (fs.face_length(f) != 3) {
      throw ConsistencyFailure("non-triangular face " + std::to_string(f) + " inside C" + dump(t));
    }
    const auto& ds = fs.faces[f];
    const std::array<Vertex, 3> tri{g.dart_tail(ds[0]), g.dart_tail(ds[1]), g.dart_tail(ds[2])};
    if (!h.contains(tri[0]) || !h.contains(tri[1]) || !h.contains(tri[2])) continue;
    t.triangles.push_back(tri);
    for (DartId d : ds) sum_ids.push_back(g.edge_of(d));
  }
  t.sum = EdgeSetF2(g, std::move(sum_ids));

  try {
    t.extracted = extract_cycle_containing_path(t.sum, external);
  } catch (const InvalidInput& e) {
    throw ConsistencyFailure(std::string("no cycle through P in K: ") + e.what() + dump(t));
  }

  Path out{x};
  for (std::size_t i = t.extracted.size(); i-- > external.size();) out.push_back(t.extracted[i]);
  out.push_back(y);

  for (EdgeId e : t.sum.edges()) {
    const Dart d = g.edge_endpoints(e);
    for (Vertex v : {d.tail, d.head}) {
      if (std::find(external.begin(), external.end(), v) != external.end()) continue;
      if (!h.on_boundary(v)) {
        throw ConsistencyFailure("vertex " + std::to_string(v) + " of K lies off the boundary of H" + dump(t));
      }
    }
  }
  if (!is_simple_path(g, out)) throw ConsistencyFailure("C' minus P is not a simple path" + dump(t));
  for (Vertex v : out) {
    if (!h.on_boundary(v)) throw ConsistencyFailure("path vertex " + std::to_string(v) + " off the boundary" + dump(t));
  }
  return out;
}

std::optional<Path> timar_path(const Graph& g, int k, const SubgraphHandle& h, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (k < 0) throw InvalidInput("k must be non-negative");
  if (!h.on_boundary(x) || !h.on_boundary(y)) throw InvalidInput("Timar path endpoints must lie in the boundary");
  if (x == y) return Path{x};
  Bfs near(g);
  near.run(std::span<const Vertex>(h.boundary()), k / 2);
  Bfs bfs(g);
  bfs.run(x, kNoCutoff, [&near](Vertex v) { return near.reached(v); });
  if (!bfs.reached(y)) return std::nullopt;
  return bfs.path_to(y);
}

SubgraphHandle midpoint_layer(const Graph& g, const Midpoint& m, int i) {
  return SubgraphHandle(g, midpoint_ball(g, m, 2 * i));
}

std::string WitnessCertificate::summary_line() const {
  std::ostringstream out;
  out << "WITNESS r=" << r << " bound=" << bound << " measured=" << measured << " ok=" << (ok ? 1 : 0);
  return out.str();
}

namespace {

struct LayerSite {
  std::size_t p_index;
  std::size_t q_index;
};

// Positions on the geodesic of the two points on the boundary of layer i.
LayerSite layer_site(const GeodesicWithMidpoint& geo, int i) {
  if (geo.mid.kind == MidpointKind::kVertex) {
    const int center = geo.dist / 2;
    return {static_cast<std::size_t>(center - i), static_cast<std::size_t>(center + i)};
  }
  const int a = (geo.dist - 1) / 2;
  return {static_cast<std::size_t>(a - (i - 1)), static_cast<std::size_t>(a + i)};
}

std::vector<int> layer_indices(int k, int r) {
  std::vector<int> out;
  if (k == 0) {
    for (int i = 1; i <= r; ++i) out.push_back(i);
  } else {
    for (int j = 1; j <= r / (k + 2); ++j) out.push_back((k + 1) * j);
  }
  return out;
}

std::vector<Vertex> midpoint_sources(const Midpoint& m) {
  if (m.kind == MidpointKind::kVertex) return {m.a};
  return {m.a, m.b};
}

// External p_i-q_i walk: back along the geodesic to p, along P to q, back to q_i.
Path external_path(const GeodesicWithMidpoint& geo, const Path& avoiding, const LayerSite& site) {
  Path walk;
  for (std::size_t j = site.p_index + 1; j-- > 0;) walk.push_back(geo.path[j]);
  for (std::size_t j = 1; j + 1 < avoiding.size(); ++j) walk.push_back(avoiding[j]);
  for (std::size_t j = geo.path.size(); j-- > site.q_index;) walk.push_back(geo.path[j]);
  return shortcut_walk(walk);
}

WitnessCertificate build_witness(const PlanarPatch& patch, int k, const BpPairResult& violation, int r) {
  const Graph& g = patch.graph();
  if (r < 1) throw InvalidInput("witness radius must be at least 1");
  if (!violation.violated() || violation.avoiding.size() < 2) throw InvalidInput("witness needs a violation");
  const GeodesicWithMidpoint& geo = violation.geodesic;
  const Midpoint m = geo.mid;
  const auto ball_r = midpoint_ball(g, m, 2 * r);
  for (Vertex v : violation.avoiding) {
    if (std::binary_search(ball_r.begin(), ball_r.end(), v)) {
      throw InvalidInput("the avoiding path meets the midpoint ball of radius " + std::to_string(r));
    }
  }
  const int margin = midpoint_ball_radius(m, 2 * r) + 1 + k / 2;
  for (Vertex e : midpoint_sources(m)) patch.require_certified(e, margin);

  WitnessCertificate cert;
  cert.r = r;
  cert.k = k;
  cert.geodesic = geo;
  cert.avoiding = violation.avoiding;
  for (int i : layer_indices(k, r)) {
    const LayerSite site = layer_site(geo, i);
    const SubgraphHandle h = midpoint_layer(g, m, i);
    WitnessLayer layer;
    layer.index = i;
    layer.p_i = geo.path[site.p_index];
    layer.q_i = geo.path[site.q_index];
    layer.dist_pq = static_cast<int>(site.q_index - site.p_index);
    const Path ext = external_path(geo, violation.avoiding, site);
    if (ext.front() != layer.p_i || ext.back() != layer.q_i) {
      throw ConsistencyFailure("external walk for layer " + std::to_string(i) + " lost its endpoints");
    }
    for (std::size_t j = 1; j + 1 < ext.size(); ++j) {
      if (h.contains(ext[j])) throw ConsistencyFailure("external walk for layer " + std::to_string(i) + " enters H");
    }
    auto path = k == 0 ? boundary_path_bfs(g, h, layer.p_i, layer.q_i) : timar_path(g, k, h, layer.p_i, layer.q_i);
    if (!path) {
      throw ConsistencyFailure("no boundary path between " + std::to_string(layer.p_i) + " and " +
                               std::to_string(layer.q_i) + " in layer " + std::to_string(i) +
                               " although an external path exists");
    }
    layer.path = std::move(*path);
    cert.path_vertices += static_cast<std::int64_t>(layer.path.size());
    cert.bound += 2 * i;
    cert.layers.push_back(std::move(layer));
  }
  cert.formula_bound = k == 0 ? static_cast<double>(r) * r
                              : static_cast<double>(k + 1) * r * r / (static_cast<double>(k + 2) * (k + 2));
  cert.measured = static_cast<std::int64_t>(ball_r.size());
  cert.ok = audit_certificate(g, cert).ok;
  return cert;
}

}  // namespace

WitnessCertificate quadratic_growth_witness(const PlanarPatch& patch, const BpPairResult& violation, int r) {
  if (!patch.is_triangulation()) throw InvalidInput("the quadratic growth witness needs a triangulation patch");
  return build_witness(patch, 0, violation, r);
}

WitnessCertificate ksc_growth_witness(const PlanarPatch& patch, int k, const BpPairResult& violation, int r) {
  if (k < 3) throw InvalidInput("k must be at least 3");
  return build_witness(patch, k, violation, r);
}

AuditResult audit_certificate(const Graph& g, const WitnessCertificate& cert) {
  AuditResult res;
  auto fail = [&res](std::string msg) {
    res.ok = false;
    res.failures.push_back(std::move(msg));
  };
  const auto& geo = cert.geodesic;
  const int r = cert.r;
  const int k = cert.k;

  if (geo.path.empty() || !is_simple_path(g, geo.path) || geo.path.front() != geo.p || geo.path.back() != geo.q) {
    fail("geodesic is not a simple p-q path");
    return res;
  }
  if (distance(g, geo.p, geo.q) != geo.dist || static_cast<int>(geo.path.size()) != geo.dist + 1) {
    fail("geodesic is not shortest");
    return res;
  }
  const bool vertex_mid = geo.dist % 2 == 0;
  if (vertex_mid != (geo.mid.kind == MidpointKind::kVertex) ||
      (vertex_mid && geo.path[geo.dist / 2] != geo.mid.a) ||
      (!vertex_mid && (geo.path[(geo.dist - 1) / 2] != geo.mid.a || geo.path[(geo.dist + 1) / 2] != geo.mid.b))) {
    fail("midpoint does not split the geodesic");
    return res;
  }

  // Distances from the midpoint: the ball of radius i is {dm <= rho(i)}.
  Bfs from_mid(g);
  from_mid.run(midpoint_sources(geo.mid));
  auto rho = [&](int i) { return midpoint_ball_radius(geo.mid, 2 * i); };
  auto in_ball = [&](Vertex v, int i) { return from_mid.reached(v) && from_mid.distance(v) <= rho(i); };
  auto on_sphere_boundary = [&](Vertex v, int i) {
    if (!in_ball(v, i)) return false;
    for (Vertex w : g.neighbors(v)) {
      if (!in_ball(w, i)) return true;
    }
    return false;
  };

  const Path& avoid = cert.avoiding;
  if (avoid.empty() || !is_simple_path(g, avoid) || avoid.front() != geo.p || avoid.back() != geo.q) {
    fail("avoiding path is not a simple p-q path");
  } else {
    for (Vertex v : avoid) {
      if (in_ball(v, r)) {
        fail("avoiding path meets the ball of radius r");
        break;
      }
    }
  }

  const auto expected = layer_indices(k, r);
  if (expected.size() != cert.layers.size()) {
    fail("layer count " + std::to_string(cert.layers.size()) + " != " + std::to_string(expected.size()));
    return res;
  }
  std::vector<std::uint8_t> used(g.vertex_count(), 0);
  std::int64_t claim = 0;
  std::int64_t total = 0;
  Bfs near(g);
  for (std::size_t li = 0; li < cert.layers.size(); ++li) {
    const auto& layer = cert.layers[li];
    const int i = expected[li];
    const std::string tag = "layer " + std::to_string(i) + ": ";
    if (layer.index != i) fail(tag + "unexpected index");
    const LayerSite site = layer_site(geo, i);
    if (layer.p_i != geo.path[site.p_index] || layer.q_i != geo.path[site.q_index]) {
      fail(tag + "endpoints are not the geodesic's boundary points");
    }
    if (!on_sphere_boundary(layer.p_i, i) || !on_sphere_boundary(layer.q_i, i)) fail(tag + "endpoint off the boundary");
    if (layer.dist_pq != static_cast<int>(site.q_index - site.p_index)) fail(tag + "wrong endpoint distance");
    const Path& path = layer.path;
    if (path.empty() || !is_simple_path(g, path) || path.front() != layer.p_i || path.back() != layer.q_i) {
      fail(tag + "not a simple p_i-q_i path");
      continue;
    }
    if (k == 0) {
      for (Vertex v : path) {
        if (!on_sphere_boundary(v, i)) {
          fail(tag + "vertex " + std::to_string(v) + " off the boundary");
          break;
        }
      }
    } else {
      std::vector<Vertex> boundary;
      for (Vertex v : from_mid.visited()) {
        if (on_sphere_boundary(v, i)) boundary.push_back(v);
      }
      near.run(std::span<const Vertex>(boundary), k / 2);
      for (Vertex v : path) {
        if (!near.reached(v)) {
          fail(tag + "vertex " + std::to_string(v) + " farther than k/2 from the boundary");
          break;
        }
      }
    }
    if (static_cast<std::int64_t>(path.size()) < 2 * i) fail(tag + "shorter than 2i vertices");
    for (Vertex v : path) {
      if (used[v]) fail(tag + "shares vertex " + std::to_string(v) + " with an earlier layer");
      used[v] = 1;
      if (!in_ball(v, r)) fail(tag + "vertex " + std::to_string(v) + " outside the ball of radius r");
    }
    claim += 2 * i;
    total += static_cast<std::int64_t>(path.size());
  }

  if (cert.bound != claim) fail("bound does not equal the sum of layer claims");
  if (cert.path_vertices != total) fail("recorded path total is wrong");
  std::int64_t ball_size = 0;
  for (Vertex v : from_mid.visited()) {
    if (in_ball(v, r)) ++ball_size;
  }
  if (cert.measured != ball_size) fail("measured ball size is wrong");
  if (total < claim) fail("paths are shorter than claimed");
  if (ball_size < total) fail("ball smaller than the disjoint paths it contains");
  if (k == 0) {
    if (claim != static_cast<std::int64_t>(r) * (r + 1)) fail("bound != r(r+1)");
    if (claim <= static_cast<std::int64_t>(r) * r) fail("bound does not exceed r^2");
    if (ball_size <= static_cast<std::int64_t>(r) * r) fail("measured ball does not exceed r^2");
  } else {
    const std::int64_t j = r / (k + 2);
    if (claim != static_cast<std::int64_t>(k + 1) * j * (j + 1)) fail("bound != (k+1) J (J+1)");
    const double formula = static_cast<double>(k + 1) * r * r / (static_cast<double>(k + 2) * (k + 2));
    if (cert.formula_bound != formula) fail("formula bound misreported");
    // Σ_{j <= r/(k+2)} 2(k+1)j exceeds (k+1) r²/(k+2)² when (k+2) divides r.
    if (j > 0 && r % (k + 2) == 0 && static_cast<double>(claim) <= formula) fail("bound does not exceed formula");
  }
  return res;
}

void write_certificate(std::ostream& out, const WitnessCertificate& cert) {
  const auto& geo = cert.geodesic;
  out << "# witness k=" << cert.k << " r=" << cert.r << " p=" << geo.p << " q=" << geo.q << " dist=" << geo.dist
      << " midpoint=" << to_string(geo.mid.kind) << ':' << geo.mid.a;
  if (geo.mid.kind == MidpointKind::kEdge) out << '-' << geo.mid.b;
  out << " avoiding_len=" << (cert.avoiding.empty() ? 0 : cert.avoiding.size() - 1) << '\n';
  for (const auto& layer : cert.layers) {
    out << "layer i=" << layer.index << " p=" << layer.p_i << " q=" << layer.q_i << " dist=" << layer.dist_pq
        << " len=" << layer.path.size() << " path=" << join_limited(layer.path, layer.path.size()) << '\n';
  }
  out << "# path_vertices=" << cert.path_vertices << " formula_bound=" << cert.formula_bound << '\n';
  out << cert.summary_line() << '\n';
}

DichotomyOutcome dichotomy_check(const PlanarPatch& patch, int r, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                 unsigned threads) {
  DichotomyOutcome out;
  const BpReport report = bp_scan(patch, 2 * r, pairs, {}, threads);
  out.tested = report.tested();
  out.violations = report.violations();
  if (out.tested == 0) {
    out.detail = "no pair could be tested";
    return out;
  }
  if (out.violations == 0) {
    out.branch = DichotomyOutcome::Branch::kNoViolation;
    return out;
  }
  for (const auto& pr : report.pairs) {
    if (!pr.violated()) continue;
    try {
      WitnessCertificate cert = quadratic_growth_witness(patch, pr, r);
      if (cert.ok && cert.measured > static_cast<std::int64_t>(r) * r) {
        out.branch = DichotomyOutcome::Branch::kWitness;
      } else {
        out.detail = "certificate failed its audit";
      }
      out.certificate = std::move(cert);
    } catch (const Error& e) {
      out.detail = e.what();
    }
    break;
  }
  return out;
}

}  // namespace qtree
