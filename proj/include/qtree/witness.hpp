#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtree/coarse_geometry.hpp"
#include "qtree/cycle_space.hpp"
#include "qtree/graph.hpp"
#include "qtree/metric.hpp"

namespace qtree {

/// Shortest x-y path using only vertices of ∂H (smallest-id parents).
/// Throws InvalidInput if x or y is not in ∂H; nullopt when none exists.
std::optional<Path> boundary_path_bfs(const Graph& g, const SubgraphHandle& h, Vertex x, Vertex y);

/// Intermediate objects of the cycle-space construction, kept for dumps and
/// cross-checks.
struct CycleSpaceTrace {
  Path inner;   // Q: x-y path inside H
  Path cycle;   // C = P ∪ Q, starting with P
  std::vector<std::array<Vertex, 3>> triangles;  // facial triangles on the bounded side with all vertices in H
  EdgeSetF2 sum;                                 // K = E(C) + Σ E(T)
  Path extracted;                                // C' ⊇ P, starting with P
};

/// x-y path in ∂H obtained from the cycle-space argument: C = P ∪ Q, the
/// triangles of H on the side of C away from the outer face are added to E(C),
/// and the cycle of the sum through P yields the path C' \ P.
///
/// Requires a triangulation patch, H connected, `external` a simple x-y path
/// with at least one internal vertex and all internal vertices outside H, and
/// H ∪ external inside the search region (CertificationError otherwise).
/// Any failed step of the argument raises ConsistencyFailure with a dump.
Path boundary_path_cyclespace(const PlanarPatch& patch, const SubgraphHandle& h, Vertex x, Vertex y,
                              const Path& external, CycleSpaceTrace* trace = nullptr);

/// x-y path all of whose vertices lie within floor(k/2) of ∂H; nullopt when
/// none exists.
std::optional<Path> timar_path(const Graph& g, int k, const SubgraphHandle& h, Vertex x, Vertex y);

struct WitnessLayer {
  int index = 0;       // i: the layer is the boundary of the midpoint ball of radius i
  Vertex p_i = -1;     // p-side point of the geodesic on that boundary
  Vertex q_i = -1;
  int dist_pq = 0;     // d(p_i, q_i)
  Path path;           // p_i .. q_i
};

/// Lower bound on a ball size built from disjoint boundary paths.
struct WitnessCertificate {
  int r = 0;
  int k = 0;  // 0 for the triangulation witness, else the cycle-length bound
  GeodesicWithMidpoint geodesic;
  Path avoiding;  // P: p-q path missing the midpoint ball of radius r
  std::vector<WitnessLayer> layers;
  std::int64_t bound = 0;         // Σ over layers of the per-layer length bound
  double formula_bound = 0;       // r² or (k+1) r² / (k+2)²
  std::int64_t path_vertices = 0; // Σ |P_i|
  std::int64_t measured = 0;      // |midpoint ball of radius r|
  bool ok = false;

  std::string summary_line() const;
};

/// Triangulation witness. `violation` must carry a canonical geodesic and a
/// p-q path avoiding the midpoint ball of radius r.
WitnessCertificate quadratic_growth_witness(const PlanarPatch& patch, const BpPairResult& violation, int r);

/// k-SC witness using layers i = (k+1) j for j in [1, floor(r / (k+2))].
WitnessCertificate ksc_growth_witness(const PlanarPatch& patch, int k, const BpPairResult& violation, int r);

/// Independent re-check of a certificate from raw patch data.
struct AuditResult {
  bool ok = true;
  std::vector<std::string> failures;
};
AuditResult audit_certificate(const Graph& g, const WitnessCertificate& cert);

/// One record per layer followed by the summary line.
void write_certificate(std::ostream& out, const WitnessCertificate& cert);

/// Testable form of the growth dichotomy for one scale: either no tested pair
/// violates the r-bottleneck condition, or a violation yields an audited
/// certificate with measured ball size > r².
struct DichotomyOutcome {
  enum class Branch { kNoViolation, kWitness, kNeither } branch = Branch::kNeither;
  std::size_t tested = 0;
  std::size_t violations = 0;
  std::optional<WitnessCertificate> certificate;
  std::string detail;
};
DichotomyOutcome dichotomy_check(const PlanarPatch& patch, int r, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                 unsigned threads = 1);

/// Midpoint ball of radius i as a subgraph: B_m(i) for a vertex midpoint and
/// B_{a,b}(i - 1) for an edge midpoint.
SubgraphHandle midpoint_layer(const Graph& g, const Midpoint& m, int i);

}  // namespace qtree
