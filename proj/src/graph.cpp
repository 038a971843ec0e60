#include "qtree/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include "qtree/errors.hpp"

namespace qtree {

Graph::Graph(const std::vector<std::vector<Vertex>>& adjacency) {
  const auto n = adjacency.size();
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    offsets_[v + 1] = offsets_[v] + static_cast<DartId>(adjacency[v].size());
  }
  const auto darts = static_cast<std::size_t>(offsets_[n]);
  if (darts % 2 != 0) throw InvalidInput("adjacency is not symmetric (odd degree sum)");
  heads_.resize(darts);
  tails_.resize(darts);
  for (std::size_t v = 0; v < n; ++v) {
    DartId d = offsets_[v];
    for (Vertex w : adjacency[v]) {
      if (w < 0 || static_cast<std::size_t>(w) >= n) {
        throw InvalidInput("neighbor id " + std::to_string(w) + " of vertex " + std::to_string(v) +
                           " out of range");
      }
      if (w == static_cast<Vertex>(v)) throw InvalidInput("self-loop at vertex " + std::to_string(v));
      tails_[d] = static_cast<Vertex>(v);
      heads_[d] = w;
      ++d;
    }
  }

  // Pair every dart with its reverse by sorting on the unordered endpoint pair.
  std::vector<std::tuple<Vertex, Vertex, DartId>> keyed(darts);
  for (DartId d = 0; d < static_cast<DartId>(darts); ++d) {
    keyed[d] = {std::min(tails_[d], heads_[d]), std::max(tails_[d], heads_[d]), d};
  }
  std::sort(keyed.begin(), keyed.end());
  reverse_.assign(darts, -1);
  edge_of_.assign(darts, -1);
  edges_.reserve(darts / 2);
  for (std::size_t i = 0; i < darts;) {
    const auto [a, b, d0] = keyed[i];
    if (i + 1 >= darts || std::get<0>(keyed[i + 1]) != a || std::get<1>(keyed[i + 1]) != b) {
      throw InvalidInput("edge " + std::to_string(a) + "-" + std::to_string(b) +
                         " is listed by only one endpoint");
    }
    if (i + 2 < darts && std::get<0>(keyed[i + 2]) == a && std::get<1>(keyed[i + 2]) == b) {
      throw InvalidInput("parallel edges between " + std::to_string(a) + " and " + std::to_string(b));
    }
    const DartId d1 = std::get<2>(keyed[i + 1]);
    if (tails_[d0] == tails_[d1]) {
      throw InvalidInput("parallel edges between " + std::to_string(a) + " and " + std::to_string(b));
    }
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b});
    reverse_[d0] = d1;
    reverse_[d1] = d0;
    edge_of_[d0] = e;
    edge_of_[d1] = e;
    i += 2;
  }
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v)) throw InvalidInput("unknown vertex id " + std::to_string(v));
}

std::optional<DartId> Graph::find_dart(Vertex u, Vertex v) const noexcept {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  for (DartId d = offsets_[u]; d < offsets_[u + 1]; ++d) {
    if (heads_[d] == v) return d;
  }
  return std::nullopt;
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const noexcept {
  if (auto d = find_dart(u, v)) return edge_of_[*d];
  return std::nullopt;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> out(vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    auto nb = neighbors(static_cast<Vertex>(v));
    out[v].assign(nb.begin(), nb.end());
  }
  return out;
}

std::vector<std::int32_t> Graph::component_labels() const {
  std::vector<std::int32_t> label(vertex_count(), -1);
  std::int32_t next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < label.size(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t Graph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);
}

DartId next_dart_in_face(const Graph& g, DartId d) noexcept {
  const DartId back = g.reverse(d);  // (v, u), stored in v's rotation
  const Vertex v = g.dart_tail(back);
  const DartId first = g.first_dart(v);
  const auto deg = static_cast<DartId>(g.degree(v));
  return first + (back - first + 1) % deg;
}

FaceStructure trace_faces(const Graph& g) {
  FaceStructure fs;
  fs.face_of_dart.assign(g.dart_count(), -1);
  for (DartId start = 0; start < static_cast<DartId>(g.dart_count()); ++start) {
    if (fs.face_of_dart[start] >= 0) continue;
    const auto f = static_cast<FaceId>(fs.faces.size());
    std::vector<DartId> cycle;
    DartId d = start;
    do {
      fs.face_of_dart[d] = f;
      cycle.push_back(d);
      d = next_dart_in_face(g, d);
    } while (d != start);
    fs.faces.push_back(std::move(cycle));
  }
  return fs;
}

Path FaceStructure::face_vertices(const Graph& g, FaceId f) const {
  Path out;
  out.reserve(faces[f].size());
  for (DartId d : faces[f]) out.push_back(g.dart_tail(d));
  return out;
}

namespace {

std::vector<int> multi_source_distances(const Graph& g, const std::vector<Vertex>& sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

PlanarPatch::PlanarPatch(Graph graph, std::optional<Dart> outer, std::vector<Vertex> centers,
                         int cert_radius, bool triangulation, std::vector<std::string> provenance)
    : graph_(std::move(graph)),
      outer_(outer),
      centers_(std::move(centers)),
      cert_radius_(cert_radius),
      triangulation_(triangulation),
      provenance_(std::move(provenance)) {
  if (cert_radius_ < 0) throw InvalidInput("cert_radius must be non-negative");
  for (Vertex c : centers_) graph_.require_vertex(c);

  faces_ = trace_faces(graph_);

  // Euler: V - E + F = 2 per component; an isolated vertex contributes the
  // one face that no dart traces.
  const auto labels = graph_.component_labels();
  const std::size_t components =
      labels.empty() ? 0 : static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.degree(static_cast<Vertex>(v)) == 0) ++isolated;
  }
  const auto euler = static_cast<long long>(graph_.vertex_count()) -
                     static_cast<long long>(graph_.edge_count()) +
                     static_cast<long long>(faces_.face_count() + isolated);
  if (euler != 2 * static_cast<long long>(components)) {
    std::ostringstream msg;
    msg << "rotation system is not planar: V - E + F = " << euler << " over " << components
        << " component(s)";
    throw EmbeddingError(msg.str());
  }

  if (graph_.edge_count() > 0) {
    if (!outer_) throw InvalidInput("patch with edges needs an outer dart");
    auto d = graph_.find_dart(outer_->tail, outer_->head);
    if (!d) throw InvalidInput("outer dart is not an edge of the patch");
    outer_face_ = faces_.face_of_dart[*d];
  } else if (outer_) {
    throw InvalidInput("edgeless patch cannot designate an outer dart");
  }

  center_dist_ = multi_source_distances(graph_, centers_);

  if (triangulation_) {
    for (FaceId f = 0; f < static_cast<FaceId>(faces_.face_count()); ++f) {
      if (f == outer_face_) continue;
      if (faces_.face_length(f) != 3) {
        throw InvalidInput("triangulation flag set but face " + std::to_string(f) + " has length " +
                           std::to_string(faces_.face_length(f)));
      }
      const auto verts = faces_.face_vertices(graph_, f);
      if (verts[0] == verts[1] || verts[1] == verts[2] || verts[0] == verts[2]) {
        throw InvalidInput("triangulation flag set but face " + std::to_string(f) + " is degenerate");
      }
    }
    if (outer_face_ >= 0) {
      for (DartId d : faces_.faces[outer_face_]) {
        const Vertex v = graph_.dart_tail(d);
        if (center_dist_[v] >= 0 && center_dist_[v] < cert_radius_) {
          throw InvalidInput("vertex " + std::to_string(v) +
                             " inside the certified radius lies on the outer face");
        }
      }
    }
  }
}

std::optional<std::string> PlanarPatch::provenance_value(const std::string& key) const {
  const std::string prefix = key + "=";
  for (const auto& line : provenance_) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return std::nullopt;
}

bool PlanarPatch::certified(Vertex v, int radius) const noexcept {
  if (!graph_.has_vertex(v) || radius < 0) return false;
  const int d = center_dist_[v];
  return d >= 0 && d + radius <= cert_radius_;
}

void PlanarPatch::require_certified(Vertex v, int radius) const {
  graph_.require_vertex(v);
  if (!certified(v, radius)) {
    std::ostringstream msg;
    msg << "ball of radius " << radius << " around vertex " << v
        << " is not certified (center distance " << center_dist_[v] << ", cert_radius "
        << cert_radius_ << ")";
    throw CertificationError(msg.str());
  }
}

std::vector<std::array<Vertex, 3>> PlanarPatch::facial_triangles() const {
  std::vector<std::array<Vertex, 3>> out;
  for (FaceId f = 0; f < static_cast<FaceId>(faces_.face_count()); ++f) {
    if (f == outer_face_ || faces_.face_length(f) != 3) continue;
    const auto& ds = faces_.faces[f];
    out.push_back({graph_.dart_tail(ds[0]), graph_.dart_tail(ds[1]), graph_.dart_tail(ds[2])});
  }
  return out;
}

}  // namespace qtree
