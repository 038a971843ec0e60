#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtree/coarse_geometry.hpp"
#include "qtree/generators.hpp"
#include "qtree/graph.hpp"
#include "qtree/metric.hpp"
#include "qtree/witness.hpp"

namespace qtree {

/// Two-colouring of the vertices; `scale` is the r it is meant for (0 if none).
struct Coloring {
  std::vector<std::uint8_t> color;
  int scale = 0;
};

/// Maximal monochromatic connected subgraphs, ordered by smallest member.
struct MonoComponents {
  std::vector<std::int32_t> label;          // per vertex
  std::vector<std::vector<Vertex>> members; // sorted
};
MonoComponents monochromatic_components(const Graph& g, const Coloring& c);

/// Diameter of a vertex set in the host metric. Exact when below `cap`;
/// otherwise `value == cap` and (u, v) is a pair at distance >= cap.
struct DiameterResult {
  int value = 0;
  Vertex u = -1;
  Vertex v = -1;
};
DiameterResult set_diameter(const Graph& g, const std::vector<Vertex>& members, int cap);

/// First monochromatic component (by smallest member) of host diameter >= r.
struct OffendingComponent {
  std::size_t index = 0;
  std::vector<Vertex> members;
  Vertex u = -1;  // a pair of members at distance >= r
  Vertex v = -1;
  int distance = 0;
};
std::optional<OffendingComponent> coloring_check(const Graph& g, const Coloring& c, int r);

/// Greedy centers in BFS order from `root` at pairwise distance >= 2 radius + 1,
/// vertices assigned to their nearest center, and cells coloured by the
/// parity of their BFS depth in the cell adjacency graph.
Coloring voronoi_ball_coloring(const Graph& g, Vertex root, int radius = 2);
/// Colour = BFS depth from `root` mod 2.
Coloring depth_parity_coloring(const Graph& g, Vertex root);
/// Colour = floor(first coordinate / width) mod 2.
Coloring stripe_coloring(const LatticeCoords& coords, int width);

/// Colouring of the subdivided grid chain at scale s: every G_n with n <= 4s
/// and the links among them form a lump of colour 0; each larger G_n gets a
/// proper colouring of its grid vertices, spread s steps along each incident
/// subdivided edge, with the rest of each edge split into an even number of
/// alternating runs of length in [s, 2s].
struct GridChainColoring {
  Coloring coloring;
  std::vector<std::uint8_t> lump;  // per vertex
};
GridChainColoring grid_chain_coloring(const GridChain& chain, int s);

/// Smallest host distance between two distinct monochromatic components of
/// the same colour; `ok` when it is at least s.
struct DisjointnessResult {
  bool ok = true;
  int min_gap = -1;  // -1 when no two same-colour components exist
  Vertex u = -1;
  Vertex v = -1;
};
DisjointnessResult disjointness_check(const Graph& g, const Coloring& c, int s);

/// Largest diameter among monochromatic components avoiding the masked set.
struct ComponentDiameterStats {
  std::size_t components = 0;
  int max_diameter = 0;
  std::size_t largest = 0;  // member count of the widest one
};
ComponentDiameterStats diameters_outside(const Graph& g, const Coloring& c, const std::vector<std::uint8_t>& mask,
                                         int cap);

/// One component C_k of the escalation.
struct EscalationStep {
  int index = 0;
  int color = 0;
  std::vector<Vertex> component;  // sorted; partial when `truncated`
  bool truncated = false;         // flood stopped after leaving the 9r ball
  int max_mid_distance = 0;       // over the component, vertex-ball units
  Vertex far_vertex = -1;
  bool inside_9r = true;          // property (3)
  bool gamma_inside_r = true;     // property (4)
  bool meets_both_parts = false;  // property (1)
  bool separates = false;         // property (2), recorded only
  DiameterResult diameter;        // capped at r
  // Passage to the next step; empty on the last step.
  Vertex x = -1;
  Vertex y = -1;
  Path boundary_path;
};

/// Escalation of a BP violation at scale R = 10 r against a colouring:
/// C_0 is the component of the midpoint (its p-side endpoint for an edge
/// midpoint), C_{k+1} the component of a boundary path of C_k together with
/// its neighbours between the first vertices of that set met on the geodesic
/// from p and from q. Stops at the first C_k of diameter >= r or violating
/// property (3) or (4).
struct EscalationTrace {
  enum class Result { kLargeComponent, kPropertyViolation, kInconclusive } result = Result::kInconclusive;
  int r = 0;
  GeodesicWithMidpoint geodesic;
  Path avoiding;
  std::vector<EscalationStep> steps;
  int violated_property = 0;  // 3 or 4 for kPropertyViolation
  std::string detail;
};
const char* to_string(EscalationTrace::Result r);

/// Throws InvalidInput when the patch is not a triangulation, the colouring
/// does not cover the patch, or `violation` does not avoid the midpoint ball
/// of radius 10 r. Throws ConsistencyFailure when a boundary path is missing
/// or the sequence revisits a component.
EscalationTrace asdim_escalation(const PlanarPatch& patch, const Coloring& c, int r, const BpPairResult& violation);

/// Re-verifies a trace from raw data.
AuditResult audit_escalation(const Graph& g, const Coloring& c, const EscalationTrace& trace);

void write_escalation(std::ostream& out, const EscalationTrace& trace);

/// `coloring v1`, `vertices N`, then one colour digit per vertex line.
void write_coloring(std::ostream& out, const Coloring& c);
Coloring read_coloring(std::istream& in);

}  // namespace qtree
