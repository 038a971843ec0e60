#include "qtree/coloring.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "qtree/errors.hpp"

namespace qtree {

namespace {

void require_cover(const Graph& g, const Coloring& c) {
  if (c.color.size() != g.vertex_count()) throw InvalidInput("colouring does not match the vertex count");
  for (auto x : c.color) {
    if (x > 1) throw InvalidInput("colours must be 0 or 1");
  }
}

}  // namespace

MonoComponents monochromatic_components(const Graph& g, const Coloring& c) {
  require_cover(g, c);
  MonoComponents out;
  out.label.assign(g.vertex_count(), -1);
  Bfs bfs(g);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (out.label[v] >= 0) continue;
    const auto col = c.color[v];
    bfs.run(v, kNoCutoff, [&](Vertex w) { return c.color[w] == col; });
    std::vector<Vertex> members(bfs.visited().begin(), bfs.visited().end());
    std::sort(members.begin(), members.end());
    for (Vertex w : members) out.label[w] = static_cast<std::int32_t>(out.members.size());
    out.members.push_back(std::move(members));
  }
  return out;
}

namespace {

// For a connected set every host distance is below its size, which bounds
// the search radius.
DiameterResult diameter_with(Bfs& bfs, const std::vector<Vertex>& members, int cap, bool connected) {
  DiameterResult best;
  if (members.size() < 2 || cap <= 0) {
    if (!members.empty()) best.u = best.v = members.front();
    return best;
  }
  const int radius = connected ? static_cast<int>(std::min<std::size_t>(cap, members.size() - 1)) : cap;
  for (Vertex u : members) {
    bfs.run(u, radius);
    for (Vertex w : members) {
      const int d = bfs.distance(w);
      if (d == kUnreached || d >= cap) return {cap, u, w};
      if (d > best.value || best.u < 0) best = {d, u, w};
    }
  }
  return best;
}

}  // namespace

DiameterResult set_diameter(const Graph& g, const std::vector<Vertex>& members, int cap) {
  Bfs bfs(g);
  return diameter_with(bfs, members, cap, false);
}

std::optional<OffendingComponent> coloring_check(const Graph& g, const Coloring& c, int r) {
  const MonoComponents comps = monochromatic_components(g, c);
  Bfs bfs(g);
  for (std::size_t i = 0; i < comps.members.size(); ++i) {
    const DiameterResult d = diameter_with(bfs, comps.members[i], r, true);
    if (d.value >= r) return OffendingComponent{i, comps.members[i], d.u, d.v, distance(g, d.u, d.v)};
  }
  return std::nullopt;
}

Coloring voronoi_ball_coloring(const Graph& g, Vertex root, int radius) {
  g.require_vertex(root);
  if (radius < 0) throw InvalidInput("negative cell radius");
  Bfs order(g);
  order.run(root);
  std::vector<Vertex> centers;
  std::vector<std::uint8_t> blocked(g.vertex_count(), 0);
  Bfs near(g);
  for (Vertex v : order.visited()) {
    if (blocked[v]) continue;
    centers.push_back(v);
    near.run(v, 2 * radius);
    for (Vertex w : near.visited()) blocked[w] = 1;
  }

  Bfs cells(g);
  cells.run(std::span<const Vertex>(centers));
  std::vector<std::int32_t> cell(g.vertex_count(), -1);
  for (std::size_t i = 0; i < centers.size(); ++i) cell[centers[i]] = static_cast<std::int32_t>(i);
  for (Vertex v : cells.visited()) {
    if (cell[v] < 0) cell[v] = cell[cells.parent(v)];
  }

  std::vector<std::vector<std::int32_t>> cell_adj(centers.size());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const Dart d = g.edge_endpoints(e);
    const auto a = cell[d.tail], b = cell[d.head];
    if (a < 0 || b < 0 || a == b) continue;
    cell_adj[a].push_back(b);
    cell_adj[b].push_back(a);
  }
  std::vector<int> depth(centers.size(), -1);
  std::vector<std::int32_t> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto b : cell_adj[queue[head]]) {
      if (depth[b] < 0) {
        depth[b] = depth[queue[head]] + 1;
        queue.push_back(b);
      }
    }
  }

  Coloring out;
  out.color.assign(g.vertex_count(), 0);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (cell[v] >= 0) out.color[v] = static_cast<std::uint8_t>(depth[cell[v]] & 1);
  }
  return out;
}

Coloring depth_parity_coloring(const Graph& g, Vertex root) {
  g.require_vertex(root);
  Bfs bfs(g);
  bfs.run(root);
  Coloring out;
  out.color.assign(g.vertex_count(), 0);
  for (Vertex v : bfs.visited()) out.color[v] = static_cast<std::uint8_t>(bfs.distance(v) & 1);
  return out;
}

Coloring stripe_coloring(const LatticeCoords& coords, int width) {
  if (width < 1) throw InvalidInput("stripe width must be positive");
  Coloring out;
  out.color.resize(coords.of_vertex.size());
  for (std::size_t v = 0; v < coords.of_vertex.size(); ++v) {
    const int q = coords.of_vertex[v][0];
    const int period = 2 * width;
    out.color[v] = static_cast<std::uint8_t>(((q % period) + period) % period >= width);
  }
  return out;
}

namespace {

// Colours the interior of a path whose end vertices carry colours ca != cb:
// s vertices copy each end, the rest alternates in an even number of runs of
// length in [s, 2s] starting with the colour opposite to ca.
void colour_run(std::vector<std::uint8_t>& color, const std::vector<Vertex>& interior, std::uint8_t ca,
                std::uint8_t cb, int s) {
  if (ca == cb) throw ConsistencyFailure("subdivided edge joins two vertices of the same colour");
  const std::size_t n = interior.size();
  const std::size_t ss = static_cast<std::size_t>(s);
  if (n < 4 * ss) throw InvalidInput("subdivided path of " + std::to_string(n) + " vertices is too short for s=" +
                                     std::to_string(s));
  const std::size_t m = n - 2 * ss;
  const std::size_t runs = 2 * ((m + 4 * ss - 1) / (4 * ss));
  const std::size_t base = m / runs, extra = m % runs;
  std::size_t at = 0;
  for (; at < ss; ++at) color[interior[at]] = ca;
  for (std::size_t j = 0; j < runs; ++j) {
    const std::uint8_t col = j % 2 == 0 ? static_cast<std::uint8_t>(1 - ca) : ca;
    for (std::size_t len = base + (j < extra ? 1 : 0); len > 0; --len) color[interior[at++]] = col;
  }
  for (; at < n; ++at) color[interior[at]] = cb;
}

std::vector<Vertex> link_interior(const Path& link) {
  return std::vector<Vertex>(link.begin() + 1, link.end() - 1);
}

}  // namespace

GridChainColoring grid_chain_coloring(const GridChain& chain, int s) {
  if (s < 1) throw InvalidInput("scale s must be positive");
  const Graph& g = chain.patch.graph();
  GridChainColoring out;
  auto& color = out.coloring.color;
  color.assign(g.vertex_count(), 0);
  out.coloring.scale = s;
  const int lump_max = 4 * s;

  std::uint8_t prev_exit = 0;  // colour next to the entry of the following block
  for (const GridBlock& block : chain.blocks) {
    const int n = block.n;
    if (n <= lump_max) continue;
    const std::uint8_t flip = static_cast<std::uint8_t>(1 - prev_exit);
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) color[block.grid[x * (n + 1) + y]] = static_cast<std::uint8_t>(((x + y) & 1) ^ flip);
    }
    for (const auto& e : block.edges) colour_run(color, e.interior, color[e.a], color[e.b], s);
    prev_exit = color[block.exit];
  }

  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const int n = static_cast<int>(i) + 1;  // joins G_n to G_{n+1}
    const Path& link = chain.links[i];
    const auto interior = link_interior(link);
    if (n + 1 <= lump_max) continue;
    if (n == lump_max) {
      const std::uint8_t entry = color[link.back()];
      const std::size_t tail = std::min<std::size_t>(interior.size(), static_cast<std::size_t>(s));
      for (std::size_t j = interior.size() - tail; j < interior.size(); ++j) color[interior[j]] = entry;
      continue;
    }
    colour_run(color, interior, color[link.front()], color[link.back()], s);
  }

  out.lump.assign(g.vertex_count(), 0);
  if (!chain.blocks.empty()) {
    const Vertex start = chain.blocks.front().entry;
    Bfs bfs(g);
    bfs.run(start, kNoCutoff, [&](Vertex w) { return color[w] == color[start]; });
    for (Vertex v : bfs.visited()) out.lump[v] = 1;
  }
  return out;
}

DisjointnessResult disjointness_check(const Graph& g, const Coloring& c, int s) {
  const MonoComponents comps = monochromatic_components(g, c);
  DisjointnessResult out;
  Bfs bfs(g);
  std::vector<std::int32_t> label(g.vertex_count(), -1);
  for (std::uint8_t col : {std::uint8_t{0}, std::uint8_t{1}}) {
    std::vector<Vertex> sources;
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      if (c.color[v] == col) sources.push_back(v);
    }
    if (sources.empty()) continue;
    bfs.run(std::span<const Vertex>(sources));
    for (Vertex v : bfs.visited()) {
      label[v] = c.color[v] == col && bfs.distance(v) == 0 ? comps.label[v] : label[bfs.parent(v)];
    }
    auto root = [&](Vertex v) {
      while (bfs.distance(v) > 0) v = bfs.parent(v);
      return v;
    };
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
      const Dart d = g.edge_endpoints(e);
      if (!bfs.reached(d.tail) || !bfs.reached(d.head) || label[d.tail] == label[d.head]) continue;
      const int gap = bfs.distance(d.tail) + 1 + bfs.distance(d.head);
      if (out.min_gap < 0 || gap < out.min_gap) {
        out.min_gap = gap;
        out.u = root(d.tail);
        out.v = root(d.head);
      }
    }
  }
  out.ok = out.min_gap < 0 || out.min_gap >= s;
  return out;
}

ComponentDiameterStats diameters_outside(const Graph& g, const Coloring& c, const std::vector<std::uint8_t>& mask,
                                         int cap) {
  const MonoComponents comps = monochromatic_components(g, c);
  ComponentDiameterStats out;
  Bfs bfs(g);
  for (const auto& members : comps.members) {
    if (std::any_of(members.begin(), members.end(), [&](Vertex v) { return mask[v] != 0; })) continue;
    ++out.components;
    const int d = diameter_with(bfs, members, cap, true).value;
    if (d > out.max_diameter) {
      out.max_diameter = d;
      out.largest = members.size();
    }
  }
  return out;
}

const char* to_string(EscalationTrace::Result r) {
  switch (r) {
    case EscalationTrace::Result::kLargeComponent: return "large_component";
    case EscalationTrace::Result::kPropertyViolation: return "property_violation";
    case EscalationTrace::Result::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<Vertex> sources_of(const Midpoint& m) {
  if (m.kind == MidpointKind::kVertex) return {m.a};
  return {m.a, m.b};
}

// Geometry shared by the escalation and its audit.
struct EscalationFrame {
  const Graph* g;
  int rho9 = 0;  // vertex-ball radius of B_m(9r)
  int rho1 = 0;  // vertex-ball radius of B_m(r)
  Bfs mid;
  std::vector<int> gamma_pos;  // index on the geodesic, -1 off it
  int last_p = 0;              // positions <= last_p are on p's part
  int first_q = 0;             // positions >= first_q are on q's part

  EscalationFrame(const Graph& graph, const GeodesicWithMidpoint& geo, int r)
      : g(&graph), mid(graph), gamma_pos(graph.vertex_count(), -1) {
    rho9 = midpoint_ball_radius(geo.mid, 18 * r);
    rho1 = midpoint_ball_radius(geo.mid, 2 * r);
    const auto srcs = sources_of(geo.mid);
    mid.run(std::span<const Vertex>(srcs), rho9 + 2);
    for (std::size_t i = 0; i < geo.path.size(); ++i) gamma_pos[geo.path[i]] = static_cast<int>(i);
    if (geo.mid.kind == MidpointKind::kVertex) {
      last_p = geo.dist / 2 - 1;
      first_q = geo.dist / 2 + 1;
    } else {
      last_p = (geo.dist - 1) / 2;
      first_q = last_p + 1;
    }
  }

  int dm(Vertex v) const { return mid.reached(v) ? mid.distance(v) : std::numeric_limits<int>::max(); }

  void measure(EscalationStep& st) const {
    st.max_mid_distance = 0;
    st.far_vertex = -1;
    st.gamma_inside_r = true;
    bool p_side = false, q_side = false;
    for (Vertex v : st.component) {
      const int d = dm(v);
      if (st.far_vertex < 0 || d > st.max_mid_distance) {
        st.max_mid_distance = d;
        st.far_vertex = v;
      }
      const int pos = gamma_pos[v];
      if (pos < 0) continue;
      if (d > rho1) st.gamma_inside_r = false;
      p_side |= pos <= last_p;
      q_side |= pos >= first_q;
    }
    st.inside_9r = !st.truncated && st.max_mid_distance <= rho9;
    st.meets_both_parts = p_side && q_side;
  }
};

// Flood of one colour from the seeds; stops as soon as the 9r ball is left.
std::vector<Vertex> flood(const Graph& g, const Coloring& c, std::uint8_t col, const std::vector<Vertex>& seeds,
                          const EscalationFrame& frame, bool& truncated) {
  Bfs bfs(g);
  truncated = false;
  bool stop = false;
  bfs.run(std::span<const Vertex>(seeds), kNoCutoff, [&](Vertex w) {
    if (stop || c.color[w] != col) return false;
    if (frame.dm(w) > frame.rho9) stop = true;
    return true;
  });
  truncated = stop;
  for (Vertex s : seeds) truncated |= frame.dm(s) > frame.rho9;
  std::vector<Vertex> out(bfs.visited().begin(), bfs.visited().end());
  std::sort(out.begin(), out.end());
  return out;
}

// Whether removing `cut` disconnects every vertex of `prev` on Γ ∪ P from P.
bool separates_in_cycle(const GeodesicWithMidpoint& geo, const Path& avoiding, const std::vector<Vertex>& cut,
                        const std::vector<Vertex>& prev) {
  std::unordered_map<Vertex, std::vector<Vertex>> adj;
  auto add_path = [&adj](const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      adj[p[i]].push_back(p[i + 1]);
      adj[p[i + 1]].push_back(p[i]);
    }
  };
  add_path(geo.path);
  add_path(avoiding);
  auto in = [](const std::vector<Vertex>& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  std::unordered_map<Vertex, bool> seen;
  std::vector<Vertex> queue;
  for (Vertex v : avoiding) {
    if (in(cut, v) || seen[v]) continue;
    seen[v] = true;
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (in(cut, w) || seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  for (const auto& [v, reached] : seen) {
    if (reached && in(prev, v)) return false;
  }
  return true;
}

bool avoids_ball(const Graph& g, const Midpoint& m, int delta_doubled, const Path& path) {
  const auto ball = midpoint_ball(g, m, delta_doubled);
  return std::none_of(path.begin(), path.end(),
                      [&](Vertex v) { return std::binary_search(ball.begin(), ball.end(), v); });
}

// H = C ∪ N(C), and the first H vertices on Γ from each end.
struct Passage {
  SubgraphHandle h;
  Vertex x = -1;
  Vertex y = -1;
};

Passage passage_of(const Graph& g, const std::vector<Vertex>& comp, const GeodesicWithMidpoint& geo) {
  std::vector<Vertex> hv(comp);
  for (Vertex v : comp) {
    for (Vertex w : g.neighbors(v)) hv.push_back(w);
  }
  Passage out{SubgraphHandle(g, std::move(hv))};
  for (Vertex v : geo.path) {
    if (out.h.contains(v)) {
      out.x = v;
      break;
    }
  }
  for (std::size_t i = geo.path.size(); i-- > 0;) {
    if (out.h.contains(geo.path[i])) {
      out.y = geo.path[i];
      break;
    }
  }
  return out;
}

}  // namespace

EscalationTrace asdim_escalation(const PlanarPatch& patch, const Coloring& c, int r, const BpPairResult& violation) {
  const Graph& g = patch.graph();
  require_cover(g, c);
  if (!patch.is_triangulation()) throw InvalidInput("escalation needs a triangulation patch");
  if (r < 1) throw InvalidInput("escalation scale must be at least 1");
  if (!violation.violated() || violation.avoiding.empty()) throw InvalidInput("escalation needs a BP violation");
  const GeodesicWithMidpoint& geo = violation.geodesic;
  if (!avoids_ball(g, geo.mid, 20 * r, violation.avoiding)) {
    throw InvalidInput("the avoiding path meets the midpoint ball of radius 10r");
  }

  EscalationTrace trace;
  trace.r = r;
  trace.geodesic = geo;
  trace.avoiding = violation.avoiding;
  EscalationFrame frame(g, geo, r);
  for (Vertex s : sources_of(geo.mid)) {
    if (!patch.certified(s, frame.rho9 + 2)) {
      trace.detail = "the 9r ball around the midpoint is not certified (patch too small)";
      return trace;
    }
  }

  std::vector<std::int32_t> owner(g.vertex_count(), -1);
  std::vector<Vertex> seeds{geo.mid.a};
  std::uint8_t col = c.color[geo.mid.a];
  const std::size_t guard = midpoint_ball(g, geo.mid, 18 * r).size() + 1;
  for (int k = 0;; ++k) {
    if (static_cast<std::size_t>(k) > guard) throw ConsistencyFailure("escalation exceeded its step guard");
    EscalationStep st;
    st.index = k;
    st.color = col;
    for (Vertex s : seeds) {
      if (owner[s] >= 0) {
        throw ConsistencyFailure("step " + std::to_string(k) + " returns to component of step " +
                                 std::to_string(owner[s]));
      }
    }
    st.component = flood(g, c, col, seeds, frame, st.truncated);
    frame.measure(st);
    if (k > 0) st.separates = separates_in_cycle(geo, trace.avoiding, st.component, trace.steps.back().component);
    if (!st.inside_9r || !st.gamma_inside_r) {
      trace.result = EscalationTrace::Result::kPropertyViolation;
      trace.violated_property = st.inside_9r ? 4 : 3;
      if (!st.truncated) st.diameter = set_diameter(g, st.component, r);
      trace.steps.push_back(std::move(st));
      break;
    }
    st.diameter = set_diameter(g, st.component, r);
    if (st.diameter.value >= r) {
      trace.result = EscalationTrace::Result::kLargeComponent;
      trace.steps.push_back(std::move(st));
      break;
    }
    if (k > 0 && !st.meets_both_parts) {
      throw ConsistencyFailure("component of step " + std::to_string(k) + " misses a part of the geodesic");
    }
    for (Vertex v : st.component) owner[v] = k;

    const Passage pass = passage_of(g, st.component, geo);
    if (pass.x < 0 || pass.x == geo.p || pass.y == geo.q) {
      throw ConsistencyFailure("neighbourhood of step " + std::to_string(k) + " is not crossed by the geodesic");
    }
    auto path = boundary_path_bfs(g, pass.h, pass.x, pass.y);
    if (!path) {
      throw ConsistencyFailure("no boundary path from " + std::to_string(pass.x) + " to " + std::to_string(pass.y) +
                               " around step " + std::to_string(k));
    }
    const std::uint8_t next = static_cast<std::uint8_t>(1 - col);
    for (Vertex v : *path) {
      if (c.color[v] != next) throw ConsistencyFailure("boundary path of step " + std::to_string(k) + " is not monochromatic");
    }
    st.x = pass.x;
    st.y = pass.y;
    st.boundary_path = *path;
    seeds = *path;
    col = next;
    trace.steps.push_back(std::move(st));
  }
  return trace;
}

AuditResult audit_escalation(const Graph& g, const Coloring& c, const EscalationTrace& trace) {
  AuditResult res;
  auto fail = [&res](std::string msg) {
    res.ok = false;
    res.failures.push_back(std::move(msg));
  };
  require_cover(g, c);
  const auto& geo = trace.geodesic;
  const int r = trace.r;
  if (geo.path.empty() || !is_simple_path(g, geo.path) || distance(g, geo.p, geo.q) != geo.dist) {
    fail("geodesic is not a shortest path");
    return res;
  }
  if (trace.avoiding.empty() || !is_simple_path(g, trace.avoiding) || trace.avoiding.front() != geo.p ||
      trace.avoiding.back() != geo.q || !avoids_ball(g, geo.mid, 20 * r, trace.avoiding)) {
    fail("avoiding path does not miss the 10r ball");
  }
  if (trace.result == EscalationTrace::Result::kInconclusive) {
    if (!trace.steps.empty()) fail("inconclusive trace carries steps");
    return res;
  }
  if (trace.steps.empty()) {
    fail("conclusive trace without steps");
    return res;
  }
  EscalationFrame frame(g, geo, r);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& st = trace.steps[k];
    const std::string tag = "step " + std::to_string(k) + ": ";
    const auto& comp = st.component;
    auto in = [&comp](Vertex v) { return std::binary_search(comp.begin(), comp.end(), v); };
    if (comp.empty() || !std::is_sorted(comp.begin(), comp.end())) {
      fail(tag + "empty or unsorted component");
      continue;
    }
    for (Vertex v : comp) {
      if (c.color[v] != st.color) {
        fail(tag + "component is not monochromatic");
        break;
      }
    }
    if (!SubgraphHandle(g, comp).connected()) fail(tag + "component is disconnected");
    if (!st.truncated) {
      for (Vertex v : comp) {
        for (Vertex w : g.neighbors(v)) {
          if (c.color[w] == st.color && !in(w)) {
            fail(tag + "component is not maximal");
            goto maximal_done;
          }
        }
      }
    }
  maximal_done:
    if (k == 0 && !in(geo.mid.a)) fail(tag + "first component misses the midpoint");
    if (k > 0) {
      for (Vertex v : trace.steps[k - 1].boundary_path) {
        if (!in(v)) {
          fail(tag + "component misses the previous boundary path");
          break;
        }
      }
    }
    EscalationStep check = st;
    frame.measure(check);
    if (check.inside_9r != st.inside_9r || check.gamma_inside_r != st.gamma_inside_r ||
        check.meets_both_parts != st.meets_both_parts) {
      fail(tag + "recorded properties disagree with recomputation");
    }
    const bool last = k + 1 == trace.steps.size();
    if (last) break;
    if (!st.inside_9r || !st.gamma_inside_r || st.diameter.value >= r) fail(tag + "trace continues past a violation");
    const Passage pass = passage_of(g, comp, geo);
    if (pass.x != st.x || pass.y != st.y) fail(tag + "passage endpoints are not the first geodesic hits");
    const Path& m = st.boundary_path;
    if (m.empty() || !is_simple_path(g, m) || m.front() != st.x || m.back() != st.y) {
      fail(tag + "boundary path is not a simple x-y path");
      continue;
    }
    for (Vertex v : m) {
      if (!pass.h.on_boundary(v)) {
        fail(tag + "boundary path leaves the boundary");
        break;
      }
    }
  }

  const auto& st = trace.steps.back();
  if (trace.result == EscalationTrace::Result::kLargeComponent) {
    const auto& comp = st.component;
    auto in = [&comp](Vertex v) { return std::binary_search(comp.begin(), comp.end(), v); };
    if (!in(st.diameter.u) || !in(st.diameter.v) || distance(g, st.diameter.u, st.diameter.v) < r) {
      fail("final component has no recorded pair at distance >= r");
    }
  } else if (trace.violated_property == 3) {
    if (frame.dm(st.far_vertex) <= frame.rho9 ||
        !std::binary_search(st.component.begin(), st.component.end(), st.far_vertex)) {
      fail("property (3) violation not confirmed");
    }
  } else if (trace.violated_property == 4) {
    bool found = false;
    for (Vertex v : st.component) found |= frame.gamma_pos[v] >= 0 && frame.dm(v) > frame.rho1;
    if (!found) fail("property (4) violation not confirmed");
  } else {
    fail("unknown violated property");
  }
  return res;
}

void write_escalation(std::ostream& out, const EscalationTrace& trace) {
  const auto& geo = trace.geodesic;
  out << "# escalation r=" << trace.r << " p=" << geo.p << " q=" << geo.q << " dist=" << geo.dist
      << " midpoint=" << to_string(geo.mid.kind) << ':' << geo.mid.a;
  if (geo.mid.kind == MidpointKind::kEdge) out << '-' << geo.mid.b;
  out << '\n';
  for (const auto& st : trace.steps) {
    out << "step k=" << st.index << " color=" << st.color << " size=" << st.component.size()
        << " truncated=" << st.truncated << " max_mid=" << st.max_mid_distance << " p1=" << st.meets_both_parts
        << " p2=" << st.separates << " p3=" << st.inside_9r << " p4=" << st.gamma_inside_r
        << " diam=" << st.diameter.value;
    if (st.diameter.u >= 0) out << " pair=" << st.diameter.u << ',' << st.diameter.v;
    if (!st.boundary_path.empty()) out << " x=" << st.x << " y=" << st.y << " path_len=" << st.boundary_path.size();
    out << '\n';
  }
  if (!trace.detail.empty()) out << "# " << trace.detail << '\n';
  out << "ESCALATION r=" << trace.r << " steps=" << trace.steps.size() << " result=" << to_string(trace.result)
      << " property=" << trace.violated_property << '\n';
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "coloring v1\nvertices " << c.color.size() << '\n';
  for (auto x : c.color) out << static_cast<int>(x) << '\n';
}

Coloring read_coloring(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "coloring v1") throw InvalidInput("coloring: bad header");
  if (!std::getline(in, line) || line.rfind("vertices ", 0) != 0) throw InvalidInput("coloring: missing vertex count");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(line.substr(9), &used);
    if (used != line.size() - 9) throw InvalidInput("coloring: bad vertex count");
  } catch (const std::logic_error&) {
    throw InvalidInput("coloring: bad vertex count");
  }
  Coloring c;
  c.color.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line) || (line != "0" && line != "1")) {
      throw InvalidInput("coloring: bad colour on line " + std::to_string(i + 3));
    }
    c.color.push_back(static_cast<std::uint8_t>(line[0] - '0'));
  }
  if (std::getline(in, line)) throw InvalidInput("coloring: trailing content");
  return c;
}

}  // namespace qtree
