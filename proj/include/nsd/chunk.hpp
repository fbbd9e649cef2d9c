#pragma once

// The single-chunk decomposition of a link complement whose diagram is
// alternating on a nonorientable surface.
//
// Faces of the chunk are the faces of the lifted diagram. Face R is glued to
// tau(R): boundary position i of R goes to the position of tau's image of
// the same edge, then one further step along tau(R)'s boundary walk, forward
// for colour 0 and backward for colour 1. Colour 0 marks faces whose
// boundary walk runs from over-crossing to under-crossing.

#include <array>
#include <string>
#include <vector>

#include "nsd/cover.hpp"
#include "nsd/scheme.hpp"

namespace nsd {

struct FacePairing {
  int face = 0;
  int partner = 0;
  int shift = 1;                // +1 or -1 along the partner's walk
  std::vector<int> target;      // position i of face -> position in partner
};

struct ChunkDecomposition {
  explicit ChunkDecomposition(CoverDiagram c) : cover(std::move(c)) {}

  CoverDiagram cover;
  FaceSet faces;
  std::vector<int> colour;  // per face
  std::vector<FacePairing> pairings;
  std::vector<std::vector<int>> edge_classes;  // cover edge ids, sorted
  std::vector<int> class_of_edge;
  /// Per ideal vertex: 0 if only the edges in slots 0 and 2 share a class,
  /// 1 if only slots 1 and 3 do, 2 if each pair does, -1 if neither.
  std::vector<int> glued_pair;

  int base_crossings() const { return cover.base_crossing_count(); }
  int ideal_vertices() const { return cover.crossing_count(); }
  int ideal_edges() const { return cover.edge_count(); }
};

ChunkDecomposition build_chunk(const SignedScheme& scheme);

/// Invariant violations found by recomputation; empty when consistent.
std::vector<std::string> validate_chunk(const ChunkDecomposition& chunk);

/// Reverses the rotation direction of one face's pairing only.
ChunkDecomposition flip_pairing_direction(const ChunkDecomposition& chunk, int face);

// ---------------------------------------------------------------------------
// Truncation

/// Truncated boundary. Cells 0..F-1 are the faces, now 2L-gons: position 2i
/// is what remains of edge i and position 2i+1 is the truncation edge at the
/// corner after it. Cell F + v is the square cut off ideal vertex v; its
/// position q is the truncation edge in the corner between the q-th and
/// (q+1)-th half-edges in rotation order.
struct TruncatedBoundary {
  int face_count = 0;
  int square_count = 0;
  int truncation_edges = 0;
  int interior_edges = 0;
  int vertices = 0;
  std::vector<int> cell_size;  // boundary positions per cell
  /// (cell, position) -> (cell, position) across that boundary edge
  std::vector<std::vector<std::pair<int, int>>> across;

  int cell_count() const { return static_cast<int>(cell_size.size()); }
  bool is_square(int cell) const { return cell >= face_count; }
  bool is_truncation(int cell, int position) const { return is_square(cell) || position % 2 == 1; }
  int euler_characteristic() const {
    return vertices - (truncation_edges + interior_edges) + cell_count();
  }
};

TruncatedBoundary truncate(const ChunkDecomposition& chunk);

/// f = 2 - 2g + v. With `colourable` set, odd v is rejected.
int euler_disc_count(int genus, int intersections, bool colourable = false);

/// A closed curve on the truncated boundary. Step i is an arc in `cell` that
/// leaves through boundary position `exit`; it enters where step i-1 left.
/// An empty step list denotes a circle inside `lone_cell`.
struct BoundaryCurve {
  struct Step {
    int cell = 0;
    int exit = 0;
  };
  std::vector<Step> steps;
  int lone_cell = -1;
};

bool check_normal_curve(const TruncatedBoundary& boundary, const BoundaryCurve& curve);

/// The boundary of a face pushed slightly outward: it runs through the
/// neighbouring faces and truncation squares, crossing only truncation edges.
BoundaryCurve pushed_off_face(const ChunkDecomposition& chunk, int face);

}  // namespace nsd
