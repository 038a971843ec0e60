#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtree/graph.hpp"
#include "qtree/metric.hpp"

namespace qtree {

enum class MidpointKind { kVertex, kEdge };

/// Midpoint of a geodesic: a vertex (`b == -1`) or the center of edge (a, b),
/// where a is on p's side.
struct Midpoint {
  MidpointKind kind = MidpointKind::kVertex;
  Vertex a = -1;
  Vertex b = -1;

  friend bool operator==(const Midpoint&, const Midpoint&) = default;
};

/// A shortest p-q path together with its midpoint. Distances that can be
/// half-integers are stored doubled.
struct GeodesicWithMidpoint {
  Vertex p = -1;
  Vertex q = -1;
  Path path;  // p .. q, path.size() == dist + 1
  int dist = 0;
  Midpoint mid;

  int dist_doubled() const noexcept { return 2 * dist; }
  /// Vertices of the path strictly on p's side of the midpoint, from p.
  Path p_part() const;
  /// Vertices strictly on q's side, from q.
  Path q_part() const;
};

/// Canonical geodesic: BFS from p, then walk back from q always taking the
/// smallest-id predecessor. Throws InvalidInput if p and q are disconnected.
/// `allowed`, when given, restricts the search to accepted vertices.
GeodesicWithMidpoint geodesic_with_midpoint(const Graph& g, Vertex p, Vertex q,
                                            const std::function<bool(Vertex)>& allowed = {});

/// Every midpoint of every p-q geodesic, up to `cap` of them (vertices w with
/// d(p,w) = d(w,q) = d/2, or edges (u,v) with d(p,u) = d(v,q) = (d-1)/2).
/// Returns nullopt when there are more than `cap`.
std::optional<std::vector<Midpoint>> all_midpoints(const Graph& g, Vertex p, Vertex q, std::size_t cap,
                                                   const std::function<bool(Vertex)>& allowed = {});

/// Vertex midpoint: {w : 2 d(w,m) <= delta_doubled}. Edge midpoint (u,v):
/// {w : 2 min(d(w,u), d(w,v)) + 1 <= delta_doubled}. Sorted.
std::vector<Vertex> midpoint_ball(const Graph& g, const Midpoint& m, int delta_doubled);
/// Radius of the vertex ball around the midpoint's endpoint(s), -1 if empty.
int midpoint_ball_radius(const Midpoint& m, int delta_doubled);

enum class BpOutcome { kSatisfied, kViolatedCanonical, kViolatedAll, kSkipped };
const char* to_string(BpOutcome o);
const char* to_string(MidpointKind k);

struct BpPairResult {
  Vertex p = -1;
  Vertex q = -1;
  int dist = 0;
  int delta_doubled = 0;
  BpOutcome outcome = BpOutcome::kSkipped;
  GeodesicWithMidpoint geodesic;
  /// p-q path avoiding the midpoint ball (violations only).
  Path avoiding;
  std::string skip_reason;

  bool violated() const noexcept {
    return outcome == BpOutcome::kViolatedCanonical || outcome == BpOutcome::kViolatedAll;
  }
};

struct BpOptions {
  /// Geodesic midpoints enumerated to upgrade a canonical violation.
  std::size_t midpoint_cap = 16;
  /// Throw CertificationError instead of reporting the pair as skipped.
  bool strict_margin = false;
};

/// Tests Def. "every p-q path meets B_m(δ)" for the canonical midpoint m.
///
/// Margin rule: p and q must lie in the search region (center distance at most
/// cert_radius - 1) and the midpoint ball must be certified with one step to
/// spare; the avoiding-path search is confined to the search region, so a
/// reported violation holds in the intended graph. Pairs failing the margin
/// are skipped (or throw with `strict_margin`).
BpPairResult check_bp_pair(const PlanarPatch& patch, Vertex p, Vertex q, int delta_doubled,
                           const BpOptions& options = {});

/// Re-verifies a violation from raw data: the avoiding path is a p-q path in
/// the graph and misses the midpoint ball; the geodesic is a shortest path.
bool verify_violation(const Graph& g, const BpPairResult& result);

struct PairSource {
  enum class Kind { kExhaustive, kSampled } kind = Kind::kSampled;
  std::size_t count = 1000;
  int min_distance = 1;
  int max_distance = -1;  // unbounded when negative
};

struct BpReport {
  int delta_doubled = 0;
  std::vector<BpPairResult> pairs;  // sorted by (p, q)

  std::size_t count(BpOutcome o) const;
  std::size_t violations() const { return count(BpOutcome::kViolatedCanonical) + count(BpOutcome::kViolatedAll); }
  std::size_t tested() const { return pairs.size() - count(BpOutcome::kSkipped); }
};

/// Draws test pairs: all region pairs at the allowed distances (exhaustive),
/// or `count` pairs whose distances are stratified over the buckets
/// [2^j, 2^(j+1)) (sampled). Sorted, without duplicates.
std::vector<std::pair<Vertex, Vertex>> draw_pairs(const PlanarPatch& patch, const PairSource& source,
                                                  std::mt19937_64& rng);

/// Checks every pair at one scale on `threads` workers.
BpReport bp_scan(const PlanarPatch& patch, int delta_doubled, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                 const BpOptions& options = {}, unsigned threads = 1);

/// Smallest scale among the reports with at least one tested pair and no
/// violation; nullopt means unbounded at the tested scales.
std::optional<int> least_clean_delta_doubled(const std::vector<BpReport>& reports);

/// CSV with columns pair_p,pair_q,dist,delta_doubled,outcome,midpoint_kind,path_len.
void write_bp_csv(std::ostream& out, const std::vector<BpReport>& reports);

}  // namespace qtree
