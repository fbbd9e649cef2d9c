#pragma once

// Cellular maps reduced to what curve-cutting arguments need: faces as
// cyclic walks of edge sides, and the vertex at each face corner. Works for
// orientable and nonorientable surfaces alike.

#include <array>
#include <utility>
#include <vector>

#include "nsd/cover.hpp"
#include "nsd/scheme.hpp"

namespace nsd {

struct CellMap {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edge_ends;
  /// Sides 2e and 2e+1 are the two sides of edge e.
  std::vector<std::vector<int>> face_sides;
  /// Vertex at the corner preceding each position of each face walk.
  std::vector<std::vector<int>> face_corner_vertex;
  /// side -> (face, position)
  std::vector<std::pair<int, int>> side_location;

  int edge_count() const { return static_cast<int>(edge_ends.size()); }
  int face_count() const { return static_cast<int>(face_sides.size()); }
  int euler_characteristic() const { return vertex_count - edge_count() + face_count(); }
};

/// A dart of a signed scheme: leave through half-edge h with local orientation
/// `orientation` (+1 reference, -1 reversed).
struct BaseDart {
  int half_edge = 0;
  int orientation = 1;
  bool operator==(const BaseDart&) const = default;
};

/// Regions of the base surface, one boundary walk per region, traced with
/// orientation transport across signed edges.
std::vector<std::vector<BaseDart>> trace_base_faces(const SignedScheme& scheme);

CellMap base_cell_map(const SignedScheme& scheme);
CellMap cover_cell_map(const CoverDiagram& cover, const FaceSet& fs);

}  // namespace nsd
