#include "qtree/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <iterator>
#include <map>

#include "qtree/errors.hpp"

namespace qtree {

EdgeSetF2::EdgeSetF2(const Graph& host, std::vector<EdgeId> edges) : host_(&host) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if (edges[i] < 0 || static_cast<std::size_t>(edges[i]) >= host.edge_count()) {
      throw InvalidInput("edge id " + std::to_string(edges[i]) + " out of range");
    }
    if ((j - i) % 2 == 1) edges_.push_back(edges[i]);
    i = j;
  }
}

EdgeSetF2 EdgeSetF2::of_path(const Graph& host, const Path& path) {
  std::vector<EdgeId> ids;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto e = host.edge_between(path[i - 1], path[i]);
    if (!e) {
      throw InvalidInput("vertices " + std::to_string(path[i - 1]) + " and " + std::to_string(path[i]) +
                         " are not adjacent");
    }
    ids.push_back(*e);
  }
  return EdgeSetF2(host, std::move(ids));
}

EdgeSetF2 EdgeSetF2::of_cycle(const Graph& host, const Path& cycle) {
  Path closed(cycle);
  if (cycle.size() > 1) closed.push_back(cycle.front());
  return of_path(host, closed);
}

bool EdgeSetF2::contains(EdgeId e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSetF2::contains_all(const EdgeSetF2& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

EdgeSetF2& EdgeSetF2::operator^=(const EdgeSetF2& other) {
  if (host_ == nullptr) host_ = other.host_;
  if (other.host_ != nullptr && other.host_ != host_) {
    throw InvalidInput("edge sets belong to different host graphs");
  }
  std::vector<EdgeId> out;
  out.reserve(edges_.size() + other.edges_.size());
  std::set_symmetric_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                                std::back_inserter(out));
  edges_ = std::move(out);
  return *this;
}

namespace {

std::map<Vertex, int> degrees_of(const EdgeSetF2& x) {
  std::map<Vertex, int> deg;
  for (EdgeId e : x.edges()) {
    const Dart d = x.host()->edge_endpoints(e);
    ++deg[d.tail];
    ++deg[d.head];
  }
  return deg;
}

Path canonical_cycle(Path c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

}  // namespace

bool is_cycle_space_element(const EdgeSetF2& x) {
  if (x.empty()) return true;
  for (const auto& [v, d] : degrees_of(x)) {
    if (d % 2 != 0) return false;
  }
  return true;
}

std::vector<Path> decompose_into_cycles(const EdgeSetF2& x) {
  std::vector<Path> cycles;
  if (x.empty()) return cycles;
  if (!is_cycle_space_element(x)) throw InvalidInput("edge set has a vertex of odd degree");
  const Graph& g = *x.host();

  // Remaining incident edges per vertex, in ascending edge-id order.
  std::map<Vertex, std::vector<EdgeId>> incident;
  for (EdgeId e : x.edges()) {
    const Dart d = g.edge_endpoints(e);
    incident[d.tail].push_back(e);
    incident[d.head].push_back(e);
  }
  std::vector<std::uint8_t> used(g.edge_count(), 0);
  std::map<Vertex, std::size_t> cursor;
  auto next_edge = [&](Vertex v) -> EdgeId {
    const auto& list = incident[v];
    std::size_t& c = cursor[v];
    while (c < list.size() && used[list[c]]) ++c;
    return c < list.size() ? list[c] : -1;
  };

  std::map<Vertex, std::size_t> position;
  for (auto& [start, _] : incident) {
    Path walk;
    position.clear();
    Vertex v = start;
    while (true) {
      if (auto it = position.find(v); it != position.end()) {
        Path cycle(walk.begin() + static_cast<std::ptrdiff_t>(it->second), walk.end());
        for (std::size_t i = it->second + 1; i < walk.size(); ++i) position.erase(walk[i]);
        walk.resize(it->second);
        position.erase(v);
        cycles.push_back(canonical_cycle(std::move(cycle)));
      }
      const EdgeId e = next_edge(v);
      if (e < 0) break;
      used[e] = 1;
      position[v] = walk.size();
      walk.push_back(v);
      const Dart d = g.edge_endpoints(e);
      v = d.tail == v ? d.head : d.tail;
    }
    if (!walk.empty()) throw ConsistencyFailure("cycle decomposition walk got stuck");
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Path extract_cycle_containing_path(const EdgeSetF2& x, const Path& path) {
  if (x.host() == nullptr) throw InvalidInput("edge set has no host graph");
  const Graph& g = *x.host();
  if (path.size() < 2) throw InvalidInput("path needs at least one edge");
  const EdgeSetF2 p_edges = EdgeSetF2::of_path(g, path);
  if (p_edges.size() != path.size() - 1) throw InvalidInput("path repeats an edge");
  if (!x.contains_all(p_edges)) throw InvalidInput("path is not contained in the edge set");
  const auto deg = degrees_of(x);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (deg.at(path[i]) != 2) {
      throw InvalidInput("internal path vertex " + std::to_string(path[i]) +
                         " meets an edge of the set outside the path");
    }
  }
  const EdgeId first = p_edges.edges().empty() ? -1 : *g.edge_between(path[0], path[1]);
  for (const Path& cycle : decompose_into_cycles(x)) {
    const EdgeSetF2 c_edges = EdgeSetF2::of_cycle(g, cycle);
    if (!c_edges.contains(first)) continue;
    if (!c_edges.contains_all(p_edges)) {
      throw ConsistencyFailure("decomposed cycle through the path misses part of it");
    }
    // Re-list the cycle so it starts with the path in order.
    const std::size_t n = cycle.size();
    const auto at = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), path[0]) - cycle.begin());
    const bool forward = cycle[(at + 1) % n] == path[1];
    Path out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[forward ? (at + i) % n : (at + n - i) % n]);
    return out;
  }
  throw ConsistencyFailure("no decomposed cycle contains the path");
}

CycleBasis cycle_basis(const Graph& g) {
  CycleBasis basis;
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<std::uint8_t> is_tree(g.edge_count(), 0);
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (depth[w] >= 0) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        is_tree[*g.edge_between(v, w)] = 1;
        queue.push_back(w);
      }
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    if (is_tree[e]) {
      basis.tree_edges.push_back(e);
      continue;
    }
    basis.chord_edges.push_back(e);
    const Dart d = g.edge_endpoints(e);
    std::vector<EdgeId> ids{e};
    Vertex a = d.tail;
    Vertex b = d.head;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      ids.push_back(*g.edge_between(a, parent[a]));
      a = parent[a];
    }
    basis.fundamental_cycles.emplace_back(g, std::move(ids));
  }
  return basis;
}

F2Span::F2Span(std::size_t bits) : bits_(bits), words_((bits + 63) / 64), pivot_row_(bits, -1) {}

F2Span::Row F2Span::pack(const std::vector<EdgeId>& ones) const {
  Row row(words_, 0);
  for (EdgeId e : ones) {
    if (e < 0 || static_cast<std::size_t>(e) >= bits_) throw InvalidInput("bit index out of range");
    row[static_cast<std::size_t>(e) / 64] ^= std::uint64_t{1} << (static_cast<std::size_t>(e) % 64);
  }
  return row;
}

long long F2Span::reduce(Row& row) const {
  for (std::size_t w = 0; w < words_; ++w) {
    while (row[w] != 0) {
      const std::size_t bit = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      const std::int32_t r = pivot_row_[bit];
      if (r < 0) return static_cast<long long>(bit);
      const Row& pivot = rows_[static_cast<std::size_t>(r)];
      for (std::size_t k = w; k < words_; ++k) row[k] ^= pivot[k];
    }
  }
  return -1;
}

bool F2Span::insert(const std::vector<EdgeId>& ones) {
  Row row = pack(ones);
  const long long lead = reduce(row);
  if (lead < 0) return false;
  pivot_row_[static_cast<std::size_t>(lead)] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool F2Span::contains(const std::vector<EdgeId>& ones) const {
  Row row = pack(ones);
  return reduce(row) < 0;
}

std::vector<Path> enumerate_short_cycles(const Graph& g, int k, std::size_t cap) {
  std::vector<Path> cycles;
  if (k < 3) return cycles;
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<std::uint8_t> on_path(g.vertex_count(), 0);
  std::vector<int> dist(g.vertex_count(), -1);
  Path path;

  for (Vertex s = 0; s < n; ++s) {
    // Distances back to s through vertices larger than s prune branches
    // that cannot close within k edges.
    std::vector<Vertex> touched{s};
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (dist[v] >= k / 2 + 1) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= s || dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        touched.push_back(w);
        queue.push_back(w);
      }
    }

    path.assign(1, s);
    on_path[s] = 1;
    // Iterative DFS over (vertex, next neighbor index).
    std::vector<std::size_t> next_index{0};
    while (!path.empty()) {
      const Vertex v = path.back();
      auto nbrs = g.neighbors(v);
      std::size_t& idx = next_index.back();
      if (idx >= nbrs.size()) {
        on_path[v] = 0;
        path.pop_back();
        next_index.pop_back();
        continue;
      }
      const Vertex w = nbrs[idx++];
      const int len = static_cast<int>(path.size());  // edges so far + 1
      if (w == s) {
        if (len >= 3 && path[1] < path.back()) {
          cycles.push_back(path);
          if (cycles.size() > cap) {
            for (Vertex t : touched) dist[t] = -1;
            for (Vertex t : path) on_path[t] = 0;
            throw CapacityError("more than " + std::to_string(cap) + " cycles of length <= " +
                                std::to_string(k));
          }
        }
        continue;
      }
      if (w < s || on_path[w] || dist[w] < 0) continue;
      if (len + dist[w] > k) continue;
      path.push_back(w);
      on_path[w] = 1;
      next_index.push_back(0);
    }
    for (Vertex t : touched) dist[t] = -1;
  }
  return cycles;
}

bool is_k_sc(const Graph& g, int k, std::size_t cap) {
  const CycleBasis basis = cycle_basis(g);
  if (basis.dimension() == 0) return true;
  F2Span span(g.edge_count());
  for (const Path& c : enumerate_short_cycles(g, k, cap)) {
    span.insert(EdgeSetF2::of_cycle(g, c).edges());
    if (span.rank() == basis.dimension()) break;
  }
  for (const auto& fc : basis.fundamental_cycles) {
    if (!span.contains(fc.edges())) return false;
  }
  return true;
}

}  // namespace qtree
