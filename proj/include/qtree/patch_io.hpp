#pragma once

#include <iosfwd>
#include <string>

#include "qtree/graph.hpp"

namespace qtree {

/// Text serialization of a PlanarPatch (`planar-patch v1`).
///
///     planar-patch v1
///     # family=lattice          (zero or more provenance lines)
///     vertices N edges M
///     outer U V                 (`outer -1 -1` for an edgeless patch)
///     centers C1 C2 ...
///     cert_radius R
///     triangulation 0|1
///     0: n1 n2 ...              (N rotation lines, clockwise)
///
/// Writing is canonical, so read followed by write reproduces the bytes of any
/// file this module wrote.
void write_patch(std::ostream& out, const PlanarPatch& patch);
std::string patch_to_string(const PlanarPatch& patch);
void save_patch(const std::string& path, const PlanarPatch& patch);

/// Throws InvalidInput on malformed text and whatever PlanarPatch validation
/// raises on a well-formed but invalid patch.
PlanarPatch read_patch(std::istream& in);
PlanarPatch patch_from_string(const std::string& text);
PlanarPatch load_patch(const std::string& path);

}  // namespace qtree
