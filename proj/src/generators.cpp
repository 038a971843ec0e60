#include "qtree/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "qtree/errors.hpp"
#include "qtree/metric.hpp"

namespace qtree {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::uint64_t dart_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 3.0)) throw InvalidInput("alpha must lie in (1, 3], got " + format_double(alpha));
}

}  // namespace

PlanarPatch build_from_triangles(std::size_t vertex_count, const std::vector<std::array<Vertex, 3>>& ccw_triangles,
                                 std::vector<Vertex> centers, int cert_radius, std::vector<std::string> provenance,
                                 std::optional<Dart> outer) {
  // ccw[v] holds pairs (x, y): y follows x counter-clockwise around v.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> ccw(vertex_count);
  std::unordered_map<std::uint64_t, char> used_darts;
  used_darts.reserve(ccw_triangles.size() * 3);
  for (const auto& t : ccw_triangles) {
    for (int k = 0; k < 3; ++k) {
      const Vertex v = t[k];
      const Vertex a = t[(k + 1) % 3];
      const Vertex b = t[(k + 2) % 3];
      if (v < 0 || static_cast<std::size_t>(v) >= vertex_count) throw InvalidInput("triangle vertex out of range");
      ccw[v].emplace_back(a, b);
      if (!used_darts.emplace(dart_key(v, a), 1).second) {
        throw EmbeddingError("dart " + std::to_string(v) + "->" + std::to_string(a) + " lies in two triangles");
      }
    }
  }

  std::vector<std::vector<Vertex>> rotation(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& pairs = ccw[v];
    if (pairs.empty()) continue;
    std::sort(pairs.begin(), pairs.end());
    std::unordered_map<Vertex, Vertex> succ;
    std::unordered_map<Vertex, int> has_pred;
    for (auto [x, y] : pairs) {
      succ[x] = y;
      has_pred[y] = 1;
    }
    std::optional<Vertex> start;
    for (auto [x, y] : pairs) {
      if (!has_pred.count(x)) {
        if (start) throw EmbeddingError("vertex " + std::to_string(v) + " is a pinch point of the triangle system");
        start = x;
      }
    }
    const bool interior = !start.has_value();
    if (interior) start = pairs.front().first;
    std::vector<Vertex> order{*start};
    for (Vertex x = *start;;) {
      auto it = succ.find(x);
      if (it == succ.end()) break;
      x = it->second;
      if (x == *start) break;
      order.push_back(x);
    }
    const std::size_t expected = interior ? pairs.size() : pairs.size() + 1;
    if (order.size() != expected) {
      throw EmbeddingError("triangles around vertex " + std::to_string(v) + " do not form a single fan");
    }
    std::reverse(order.begin(), order.end());
    if (interior) std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
    rotation[v] = std::move(order);
  }

  Graph g(rotation);
  if (!outer && g.edge_count() > 0) {
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
      const Vertex u = g.dart_tail(d);
      const Vertex w = g.dart_head(d);
      if (!used_darts.count(dart_key(u, w))) {
        if (!outer || std::pair(u, w) < std::pair(outer->tail, outer->head)) outer = Dart{u, w};
      }
    }
    if (!outer) throw EmbeddingError("triangles cover every dart; no outer face left");
  }
  return PlanarPatch(std::move(g), outer, std::move(centers), cert_radius, true, std::move(provenance));
}

PlanarPatch embed_by_coordinates(const std::vector<std::vector<Vertex>>& adjacency, const std::vector<Point>& coords,
                                 std::vector<Vertex> centers, int cert_radius, bool triangulation,
                                 std::vector<std::string> provenance) {
  if (coords.size() != adjacency.size()) throw InvalidInput("one coordinate per vertex required");
  std::vector<std::vector<Vertex>> rotation(adjacency.size());
  std::vector<std::pair<double, Vertex>> keyed;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    keyed.clear();
    for (Vertex w : adjacency[v]) {
      if (w < 0 || static_cast<std::size_t>(w) >= adjacency.size()) throw InvalidInput("neighbor out of range");
      keyed.emplace_back(-std::atan2(coords[w].y - coords[v].y, coords[w].x - coords[v].x), w);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto [angle, w] : keyed) rotation[v].push_back(w);
  }
  Graph g(rotation);
  std::optional<Dart> outer;
  if (g.edge_count() > 0) {
    const FaceStructure faces = trace_faces(g);
    double best = 0;
    for (const auto& face : faces.faces) {
      double area = 0;
      for (DartId d : face) {
        const Point& a = coords[g.dart_tail(d)];
        const Point& b = coords[g.dart_head(d)];
        area += a.x * b.y - a.y * b.x;
      }
      if (!outer || area < best) {
        best = area;
        outer = Dart{g.dart_tail(face.front()), g.dart_head(face.front())};
      }
    }
  }
  return PlanarPatch(std::move(g), outer, std::move(centers), cert_radius, triangulation, std::move(provenance));
}

Vertex LatticeCoords::find(int a, int b) const {
  auto it = index.find({a, b});
  return it == index.end() ? -1 : it->second;
}

namespace {

PlanarPatch triangular_lattice_impl(int radius, LatticeCoords* coords, std::vector<std::string> prov) {
  if (radius < 1) throw InvalidInput("lattice radius must be at least 1");
  static constexpr std::array<std::array<int, 2>, 6> kDirs{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
  LatticeCoords local;
  LatticeCoords& lc = coords ? *coords : local;
  lc.of_vertex.clear();
  lc.index.clear();
  auto add = [&](int q, int r) {
    lc.index.emplace(std::array<int, 2>{q, r}, static_cast<Vertex>(lc.of_vertex.size()));
    lc.of_vertex.push_back({q, r});
  };
  add(0, 0);
  for (int k = 1; k <= radius; ++k) {
    int q = -k;
    int r = k;
    for (int side = 0; side < 6; ++side) {
      for (int step = 0; step < k; ++step) {
        add(q, r);
        q += kDirs[side][0];
        r += kDirs[side][1];
      }
    }
  }
  std::vector<std::array<Vertex, 3>> tris;
  for (const auto& [q, r] : lc.of_vertex) {
    const Vertex a = lc.find(q, r);
    const Vertex b = lc.find(q + 1, r);
    const Vertex c = lc.find(q, r + 1);
    const Vertex d = lc.find(q - 1, r + 1);
    if (b >= 0 && c >= 0) tris.push_back({a, b, c});
    if (c >= 0 && d >= 0) tris.push_back({a, c, d});
  }
  return build_from_triangles(lc.of_vertex.size(), tris, {0}, radius, std::move(prov));
}

PlanarPatch square_lattice_impl(int radius, LatticeCoords* coords, std::vector<std::string> prov) {
  if (radius < 1) throw InvalidInput("lattice radius must be at least 1");
  LatticeCoords local;
  LatticeCoords& lc = coords ? *coords : local;
  lc.of_vertex.clear();
  lc.index.clear();
  // Ring by ring, so the center is vertex 0.
  for (int k = 0; k <= radius; ++k) {
    for (int x = -k; x <= k; ++x) {
      const int rest = k - std::abs(x);
      for (int y : {-rest, rest}) {
        if (lc.index.count({x, y})) continue;
        lc.index.emplace(std::array<int, 2>{x, y}, static_cast<Vertex>(lc.of_vertex.size()));
        lc.of_vertex.push_back({x, y});
      }
    }
  }
  std::vector<std::vector<Vertex>> adj(lc.of_vertex.size());
  std::vector<Point> pts;
  for (std::size_t v = 0; v < lc.of_vertex.size(); ++v) {
    const auto [x, y] = lc.of_vertex[v];
    pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const Vertex w = lc.find(x + dx, y + dy);
      if (w >= 0) adj[v].push_back(w);
    }
  }
  return embed_by_coordinates(adj, pts, {0}, radius, false, std::move(prov));
}

// Rooted tree with level sizes; children of each vertex are consecutive ids.
struct TreeShape {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<std::vector<Vertex>> children;
};

TreeShape spread_tree(const std::vector<int>& sizes) {
  TreeShape t;
  t.parent.push_back(-1);
  t.depth.push_back(0);
  t.children.emplace_back();
  Vertex level_start = 0;
  for (std::size_t r = 0; r + 1 < sizes.size(); ++r) {
    const long long a = sizes[r];
    const long long b = sizes[r + 1];
    for (long long j = 0; j < a; ++j) {
      const long long count = (j + 1) * b / a - j * b / a;
      const Vertex v = level_start + static_cast<Vertex>(j);
      for (long long c = 0; c < count; ++c) {
        const auto child = static_cast<Vertex>(t.parent.size());
        t.parent.push_back(v);
        t.depth.push_back(static_cast<int>(r + 1));
        t.children.emplace_back();
        t.children[v].push_back(child);
      }
    }
    level_start += static_cast<Vertex>(a);
  }
  return t;
}

// Clockwise rotation of a tree drawn root-up with children left to right, or
// of its mirror image (root down) when `mirror` is set.
std::vector<Vertex> tree_rotation(const TreeShape& t, Vertex v, bool mirror) {
  std::vector<Vertex> rot;
  if (t.parent[v] >= 0) rot.push_back(t.parent[v]);
  if (mirror) {
    rot.insert(rot.end(), t.children[v].begin(), t.children[v].end());
  } else {
    rot.insert(rot.end(), t.children[v].rbegin(), t.children[v].rend());
  }
  return rot;
}

PlanarPatch alpha_tree_impl(double alpha, int radius, std::vector<std::string> prov) {
  require_alpha(alpha);
  if (radius < 0) throw InvalidInput("radius must be non-negative");
  const TreeShape t = spread_tree(alpha_level_sizes(alpha, radius));
  std::vector<std::vector<Vertex>> rot(t.parent.size());
  for (Vertex v = 0; v < static_cast<Vertex>(rot.size()); ++v) rot[v] = tree_rotation(t, v, false);
  std::optional<Dart> outer;
  if (rot.size() > 1) outer = Dart{0, rot[0].front()};
  return PlanarPatch(Graph(rot), outer, {0}, radius, false, std::move(prov));
}

PlanarPatch cone_impl(const std::vector<int>& sizes, std::vector<std::string> prov) {
  if (sizes.empty() || sizes[0] != 1) throw InvalidInput("cone needs a single root level");
  std::vector<Vertex> start(sizes.size());
  Vertex total = 0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    if (r > 0 && sizes[r] < 3) throw InvalidInput("cone levels need at least 3 vertices");
    start[r] = total;
    total += sizes[r];
  }
  std::vector<std::array<Vertex, 3>> tris;
  if (sizes.size() > 1) {
    const int a = sizes[1];
    for (int j = 0; j < a; ++j) tris.push_back({0, start[1] + j, start[1] + (j + 1) % a});
  }
  for (std::size_t r = 1; r + 1 < sizes.size(); ++r) {
    const long long a = sizes[r];
    const long long b = sizes[r + 1];
    auto in = [&](long long i) { return start[r] + static_cast<Vertex>(i % a); };
    auto out = [&](long long j) { return start[r + 1] + static_cast<Vertex>(j % b); };
    long long i = 0;
    long long j = 0;
    // Inner step i sits at (2i+1)/(2a) around the circle, outer step j at
    // (2j+1)/(2b); ties go to the outer cycle.
    while (i < a || j < b) {
      const bool inner = i < a && (j == b || (2 * i + 1) * b < (2 * j + 1) * a);
      if (inner) {
        tris.push_back({in(i), out(j), in(i + 1)});
        ++i;
      } else {
        tris.push_back({in(i), out(j), out(j + 1)});
        ++j;
      }
    }
  }
  return build_from_triangles(static_cast<std::size_t>(total), tris, {0}, static_cast<int>(sizes.size()) - 1,
                              std::move(prov));
}

constexpr int kConeFirstLevel = 7;

}  // namespace

PlanarPatch triangular_lattice(int radius, LatticeCoords* coords) {
  return triangular_lattice_impl(radius, coords, GeneratorSpec{.family = "lattice", .radius = radius}.provenance());
}

PlanarPatch square_lattice(int radius, LatticeCoords* coords) {
  return square_lattice_impl(radius, coords,
                             GeneratorSpec{.family = "square-lattice", .radius = radius}.provenance());
}

PlanarPatch path_patch(int n) {
  if (n < 1) throw InvalidInput("path needs at least one vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (int v = 0; v + 1 < n; ++v) {
    adj[v].push_back(v + 1);
    adj[v + 1].push_back(v);
  }
  std::optional<Dart> outer;
  if (n > 1) outer = Dart{0, 1};
  return PlanarPatch(Graph(adj), outer, {0}, n - 1, false, {"family=path", "n=" + std::to_string(n)});
}

PlanarPatch cycle_patch(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<std::vector<Vertex>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlanarPatch(Graph(adj), Dart{1, 0}, {0}, n, false, {"family=cycle", "n=" + std::to_string(n)});
}

PlanarPatch grid_patch(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidInput("grid needs positive dimensions");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(rows) * cols);
  std::vector<Point> pts(adj.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      pts[v] = {static_cast<double>(c), static_cast<double>(r)};
      if (c + 1 < cols) {
        adj[v].push_back(v + 1);
        adj[v + 1].push_back(v);
      }
      if (r + 1 < rows) {
        adj[v].push_back(v + cols);
        adj[v + cols].push_back(v);
      }
    }
  }
  return embed_by_coordinates(adj, pts, {0}, rows + cols, false,
                              {"family=grid", "rows=" + std::to_string(rows), "cols=" + std::to_string(cols)});
}

PlanarPatch single_triangle() { return build_from_triangles(3, {{0, 1, 2}}, {0}, 0, {"family=triangle"}); }

PlanarPatch octahedron() {
  // 0 top, 5 bottom, 1..4 around the equator; (5, 2, 1) is left as the outer face.
  return build_from_triangles(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}},
                              {0}, 1, {"family=octahedron"});
}

std::vector<int> alpha_level_sizes(double alpha, int radius) {
  std::vector<int> sizes{1};
  for (int r = 1; r <= radius; ++r) {
    const double grow = std::pow(r + 1.0, alpha) - std::pow(static_cast<double>(r), alpha);
    sizes.push_back(std::max(1, static_cast<int>(std::llround(grow))));
  }
  return sizes;
}

PlanarPatch alpha_tree(double alpha, int radius) {
  return alpha_tree_impl(alpha, radius,
                         GeneratorSpec{.family = "alpha-tree", .alpha = alpha, .radius = radius}.provenance());
}

PlanarPatch cone_triangulation(double alpha, int radius) {
  if (!(alpha > 1.0 && alpha < 3.0)) throw InvalidInput("alpha must lie in (1, 3), got " + format_double(alpha));
  auto sizes = alpha_level_sizes(alpha, radius);
  for (std::size_t r = 1; r < sizes.size(); ++r) sizes[r] = std::max(3, sizes[r]);
  return cone_impl(sizes, GeneratorSpec{.family = "cone", .alpha = alpha, .radius = radius}.provenance());
}

PlanarPatch cone_triangulation_from_sizes(const std::vector<int>& sizes, std::vector<std::string> provenance) {
  return cone_impl(sizes, std::move(provenance));
}

namespace {

GluedTrees glued_trees_impl(double alpha, int radius, int max_leaves, std::vector<std::string> prov) {
  require_alpha(alpha);
  if (radius < 1) throw InvalidInput("glued trees need radius at least 1");
  if (max_leaves < 0) throw InvalidInput("max_leaves must be non-negative");
  const TreeShape t = spread_tree(alpha_level_sizes(alpha, radius));
  const auto n = static_cast<Vertex>(t.parent.size());

  // Depth-R leaves in DFS order (left to right in the drawing).
  std::vector<Vertex> leaves;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (t.depth[v] == radius) leaves.push_back(v);
    for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) stack.push_back(*it);
  }
  auto tree_distance = [&](Vertex a, Vertex b) {
    int d = 0;
    while (a != b) {
      if (t.depth[a] < t.depth[b]) std::swap(a, b);
      a = t.parent[a];
      ++d;
    }
    return d;
  };
  std::vector<Vertex> glued;
  for (Vertex leaf : leaves) {
    if (static_cast<int>(glued.size()) >= max_leaves) break;
    const int i = static_cast<int>(glued.size()) + 1;
    const long long need = i >= 62 ? (1LL << 62) : (1LL << i);
    bool ok = true;
    for (Vertex prev : glued) {
      if (tree_distance(prev, leaf) < need) {
        ok = false;
        break;
      }
    }
    if (ok) glued.push_back(leaf);
  }
  if (max_leaves >= 2 && glued.size() < 2) {
    throw InvalidInput("fewer than 2 leaves satisfy the spacing rule; increase the radius");
  }

  GluedTrees out;
  out.tree_size = static_cast<std::size_t>(n);
  out.glued = glued;
  out.depth = t.depth;
  out.parent = t.parent;
  out.mirror_of.assign(n, -1);
  std::vector<std::uint8_t> is_glued(n, 0);
  for (Vertex v : glued) is_glued[v] = 1;
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v) out.mirror_of[v] = is_glued[v] ? v : next++;

  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(next));
  for (Vertex v = 0; v < n; ++v) {
    rot[v] = tree_rotation(t, v, false);
    const Vertex m = out.mirror_of[v];
    auto mirrored = tree_rotation(t, v, true);
    for (Vertex& w : mirrored) w = out.mirror_of[w];
    if (m == v) {
      rot[v].insert(rot[v].end(), mirrored.begin(), mirrored.end());
    } else {
      rot[m] = std::move(mirrored);
    }
  }
  std::optional<Dart> outer;
  if (n > 1) outer = Dart{0, rot[0].front()};
  Graph g(rot);
  // The glued graph is finite and is its own intended graph, so every ball
  // is exact; the radius covers the whole graph from the root.
  int ecc = 0;
  {
    Bfs bfs(g);
    bfs.run(0);
    for (Vertex v : bfs.visited()) ecc = std::max(ecc, bfs.distance(v));
  }
  out.patch = PlanarPatch(std::move(g), outer, {0}, 2 * ecc + 1, false, std::move(prov));
  return out;
}

int level_offset_width_sum(int level) {
  int sum = 0;
  for (int j = kConeFirstLevel; j < level; ++j) sum += parabolic_cone_width(j);
  return sum;
}

PlanarPatch parabolic_cone_impl(int radius, std::vector<std::string> prov) {
  if (radius < 1) throw InvalidInput("parabolic cone radius must be at least 1");
  const int last = radius + kConeFirstLevel - 1;
  std::vector<Vertex> start(last + 1, 0);
  Vertex total = 1;
  for (int i = kConeFirstLevel; i <= last; ++i) {
    start[i] = total;
    total += parabolic_cone_width(i);
  }
  auto at = [&](int i, int b) { return start[i] + b % parabolic_cone_width(i); };
  std::vector<std::array<Vertex, 3>> tris;
  const int k7 = parabolic_cone_width(kConeFirstLevel);
  for (int b = 0; b < k7; ++b) tris.push_back({0, at(kConeFirstLevel, b), at(kConeFirstLevel, b + 1)});
  for (int i = kConeFirstLevel; i < last; ++i) {
    const int k = parabolic_cone_width(i);
    const int k_next = parabolic_cone_width(i + 1);
    for (int b = 0; b < k_next && b <= k; ++b) tris.push_back({at(i, b), at(i + 1, b), at(i + 1, b + 1)});
    for (int b = 0; b < k; ++b) tris.push_back({at(i, b), at(i + 1, b + 1), at(i, b + 1)});
  }
  return build_from_triangles(static_cast<std::size_t>(total), tris, {0}, radius, std::move(prov));
}

GridChain grid_chain_impl(int n_max, std::vector<std::string> prov) {
  if (n_max < 1) throw InvalidInput("grid chain needs n_max >= 1");
  GridChain chain;
  chain.n_max = n_max;
  std::vector<std::vector<Vertex>> adj;
  std::vector<Point> pts;
  auto add_vertex = [&](double x, double y) {
    adj.emplace_back();
    pts.push_back({x, y});
    return static_cast<Vertex>(adj.size() - 1);
  };
  auto link = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // Joins a and b by a path with `steps` edges along the straight segment.
  auto subdivide = [&](Vertex a, Vertex b, int steps) {
    std::vector<Vertex> interior;
    Vertex prev = a;
    for (int s = 1; s < steps; ++s) {
      const double f = static_cast<double>(s) / steps;
      const Vertex v = add_vertex(pts[a].x + f * (pts[b].x - pts[a].x), pts[a].y + f * (pts[b].y - pts[a].y));
      link(prev, v);
      interior.push_back(v);
      prev = v;
    }
    link(prev, b);
    return interior;
  };

  double offset = 0;
  for (int n = 1; n <= n_max; ++n) {
    GridBlock block;
    block.n = n;
    const int side = n + 1;
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) block.grid.push_back(add_vertex(offset + x * side, static_cast<double>(y * side)));
    }
    auto at = [&](int x, int y) { return block.grid[static_cast<std::size_t>(x) * side + y]; };
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; y <= n; ++y) {
        if (x < n) block.edges.push_back({at(x, y), at(x + 1, y), subdivide(at(x, y), at(x + 1, y), n + 1)});
        if (y < n) block.edges.push_back({at(x, y), at(x, y + 1), subdivide(at(x, y), at(x, y + 1), n + 1)});
      }
    }
    block.entry = at(0, 0);
    block.exit = at(n, 0);
    if (n > 1) {
      // The link from G_{n-1} was left dangling at a placeholder; attach it.
      Path& path = chain.links.back();
      link(path.back(), block.entry);
      path.push_back(block.entry);
    }
    offset += static_cast<double>(n) * side;
    if (n < n_max) {
      // Path of length n towards the next block, whose entry is created next.
      Path path{block.exit};
      for (int s = 1; s < n; ++s) {
        const Vertex v = add_vertex(offset + s, 0.0);
        link(path.back(), v);
        path.push_back(v);
      }
      chain.links.push_back(std::move(path));
      offset += n;
    }
    chain.blocks.push_back(std::move(block));
  }

  const Vertex center = chain.blocks.front().entry;
  Graph probe(adj);
  const int cert = distance(probe, center, chain.blocks.back().exit);
  chain.patch = embed_by_coordinates(adj, pts, {center}, cert, false, std::move(prov));
  return chain;
}

std::vector<Vertex> cycle_chain_spine(int n_max, std::vector<std::vector<Vertex>>* adj_out,
                                      std::vector<Point>* pts_out) {
  std::vector<std::vector<Vertex>> adj;
  std::vector<Point> pts;
  auto add_vertex = [&](double x, double y) {
    adj.emplace_back();
    pts.push_back({x, y});
    return static_cast<Vertex>(adj.size() - 1);
  };
  auto link = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  std::vector<Vertex> spine{add_vertex(0, 0)};
  double x = 0;
  for (int i = 1; i <= n_max; ++i) {
    const Vertex a = spine.back();
    if (i <= 2) {
      x += 1;
      const Vertex b = add_vertex(x, 0);
      link(a, b);
      spine.push_back(b);
      continue;
    }
    const double width = i;
    const Vertex b = add_vertex(x + width, 0);
    for (const auto& [edges, y] : {std::pair{i / 2, 1.0}, std::pair{i - i / 2, -1.0}}) {
      Vertex prev = a;
      for (int s = 1; s < edges; ++s) {
        const Vertex v = add_vertex(x + width * s / edges, y);
        link(prev, v);
        prev = v;
      }
      link(prev, b);
    }
    x += width;
    spine.push_back(b);
  }
  if (adj_out) *adj_out = std::move(adj);
  if (pts_out) *pts_out = std::move(pts);
  return spine;
}

PlanarPatch long_cycle_chain_impl(int n_max, std::vector<std::string> prov) {
  if (n_max < 1) throw InvalidInput("long cycle chain needs n_max >= 1");
  std::vector<std::vector<Vertex>> adj;
  std::vector<Point> pts;
  const auto spine = cycle_chain_spine(n_max, &adj, &pts);
  const int cert = distance(Graph(adj), spine.front(), spine.back());
  return embed_by_coordinates(adj, pts, {spine.front()}, cert, false, std::move(prov));
}

}  // namespace

GluedTrees glued_trees(double alpha, int radius, int max_leaves) {
  return glued_trees_impl(
      alpha, radius, max_leaves,
      GeneratorSpec{.family = "glued-trees", .alpha = alpha, .radius = radius, .max_leaves = max_leaves}
          .provenance());
}

PlanarPatch parabolic_cone(int radius) {
  return parabolic_cone_impl(radius, GeneratorSpec{.family = "parabolic-cone", .radius = radius}.provenance());
}

Vertex parabolic_cone_vertex(int level, int position) {
  if (level < kConeFirstLevel) throw InvalidInput("parabolic cone levels below 7 are collapsed into the apex");
  const int width = parabolic_cone_width(level);
  return 1 + level_offset_width_sum(level) + ((position % width) + width) % width;
}

GridChain subdivided_grid_chain(int n_max) {
  return grid_chain_impl(n_max, GeneratorSpec{.family = "grid-chain", .n_max = n_max}.provenance());
}

PlanarPatch long_cycle_chain(int n_max) {
  return long_cycle_chain_impl(n_max, GeneratorSpec{.family = "long-cycle-chain", .n_max = n_max}.provenance());
}

std::vector<Vertex> long_cycle_chain_spine(int n_max) {
  if (n_max < 1) throw InvalidInput("long cycle chain needs n_max >= 1");
  return cycle_chain_spine(n_max, nullptr, nullptr);
}

std::vector<std::string> GeneratorSpec::provenance() const {
  std::vector<std::string> out{"family=" + family};
  if (family == "alpha-tree" || family == "cone" || family == "glued-trees") {
    out.push_back("alpha=" + format_double(alpha));
  }
  if (family == "grid-chain" || family == "long-cycle-chain") {
    out.push_back("nmax=" + std::to_string(n_max));
  } else {
    out.push_back("radius=" + std::to_string(radius));
  }
  if (family == "glued-trees") out.push_back("max_leaves=" + std::to_string(max_leaves));
  out.push_back("seed=" + std::to_string(seed));
  return out;
}

PlanarPatch generate(const GeneratorSpec& spec) {
  auto prov = spec.provenance();
  const std::string& f = spec.family;
  if (f == "lattice") return triangular_lattice_impl(spec.radius, nullptr, prov);
  if (f == "square-lattice") return square_lattice_impl(spec.radius, nullptr, prov);
  if (f == "alpha-tree") return alpha_tree_impl(spec.alpha, spec.radius, prov);
  if (f == "cone") {
    if (!(spec.alpha > 1.0 && spec.alpha < 3.0)) throw InvalidInput("alpha must lie in (1, 3)");
    auto sizes = alpha_level_sizes(spec.alpha, spec.radius);
    for (std::size_t r = 1; r < sizes.size(); ++r) sizes[r] = std::max(3, sizes[r]);
    return cone_impl(sizes, prov);
  }
  if (f == "glued-trees") return glued_trees_impl(spec.alpha, spec.radius, spec.max_leaves, prov).patch;
  if (f == "parabolic-cone") return parabolic_cone_impl(spec.radius, prov);
  if (f == "grid-chain") return grid_chain_impl(spec.n_max, prov).patch;
  if (f == "long-cycle-chain") return long_cycle_chain_impl(spec.n_max, prov);
  throw InvalidInput("unknown generator family '" + f + "'");
}

std::optional<GeneratorSpec> spec_from_provenance(const PlanarPatch& patch) {
  auto family = patch.provenance_value("family");
  if (!family) return std::nullopt;
  GeneratorSpec spec;
  spec.family = *family;
  try {
    if (auto v = patch.provenance_value("alpha")) spec.alpha = std::stod(*v);
    if (auto v = patch.provenance_value("radius")) spec.radius = std::stoi(*v);
    if (auto v = patch.provenance_value("nmax")) spec.n_max = std::stoi(*v);
    if (auto v = patch.provenance_value("max_leaves")) spec.max_leaves = std::stoi(*v);
    if (auto v = patch.provenance_value("seed")) spec.seed = std::stoull(*v);
  } catch (const std::exception&) {
    throw InvalidInput("malformed generator provenance");
  }
  return spec;
}

}  // namespace qtree
