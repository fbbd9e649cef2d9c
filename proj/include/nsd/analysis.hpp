#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nsd/cell_map.hpp"
#include "nsd/cover.hpp"
#include "nsd/scheme.hpp"

namespace nsd {

// ---------------------------------------------------------------------------
// Alternation

/// Follows every component with local-orientation transport and checks that
/// crossings alternate over/under. One-sided components are walked twice.
bool strand_alternating(const SignedScheme& scheme);

struct RegionCheck {
  bool alternating = true;
  std::optional<int> offending_region;  // index into trace_base_faces()
};

/// Walks every region boundary and checks that each boundary edge runs the
/// same way (over to under, or under to over).
RegionCheck region_alternating_check(const SignedScheme& scheme);
inline bool region_alternating(const SignedScheme& scheme) {
  return region_alternating_check(scheme).alternating;
}

/// Classical alternation of the lifted diagram.
bool s_alternating(const CoverDiagram& cover);
bool s_alternating(const SignedScheme& scheme);

/// A curve crossing a region enters with the over-crossing corner on one
/// side and leaves with it on the other. Only meaningful when alternating.
bool left_right_rule_holds(const SignedScheme& scheme);

// ---------------------------------------------------------------------------
// Weak primeness

/// A simple closed curve meeting the diagram in two edge-interior points and
/// bounding a disc that contains crossings.
struct CompositeWitness {
  int edge1 = -1;
  int edge2 = -1;
  int face_a = -1;
  int face_b = -1;
  int crossings_inside = 0;
};

std::optional<CompositeWitness> find_composite_curve(const CellMap& map);

bool weakly_prime(const SignedScheme& scheme);
bool weakly_prime(const CoverDiagram& cover);

bool reduced_alternating(const SignedScheme& scheme);

// ---------------------------------------------------------------------------
// Checkerboard colourings

struct ColouringObstruction {
  enum class Kind { SelfAdjacentFace, OddCycle, TauConflict } kind = Kind::OddCycle;
  std::vector<int> faces;  // witness faces
};

struct CheckerboardResult {
  std::optional<std::vector<int>> colouring;  // per cover face, 0 or 1
  std::optional<ColouringObstruction> obstruction;
  bool colourable() const { return colouring.has_value(); }
};

CheckerboardResult checkerboard_cover(const CoverDiagram& cover, const FaceSet& fs);
/// A cover colouring that is also invariant under tau, if one exists.
CheckerboardResult checkerboard_base_colouring(const CoverDiagram& cover, const FaceSet& fs);
bool checkerboard_base(const SignedScheme& scheme);

// ---------------------------------------------------------------------------
// Bigons and twist regions

bool bigon_chain(const SignedScheme& scheme);
int twist_number_cover(const CoverDiagram& cover, const FaceSet& fs);

// ---------------------------------------------------------------------------
// Representativity and the weakly generalised alternating condition

struct Representativity {
  static Representativity infinite() { return {}; }
  static Representativity finite(int v) { return {v}; }

  std::optional<int> value;  // nullopt means infinite

  bool is_infinite() const { return !value.has_value(); }
  bool at_least(int k) const { return is_infinite() || *value >= k; }
  bool greater_than(int k) const { return is_infinite() || *value > k; }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
  bool operator==(const Representativity&) const = default;
};

bool wga(const SignedScheme& scheme, Representativity r);

struct AnalysisReport {
  SurfaceId surface;
  bool orientable_base = false;
  int crossings = 0;
  int component_count = 0;
  bool strand_alternating = false;
  bool region_alternating = false;
  bool s_alternating = false;
  bool reduced = false;
  bool weakly_prime_base = false;
  bool weakly_prime_cover = false;
  bool checkerboard_cover = false;
  std::vector<int> cover_colouring;
  bool checkerboard_base = false;
  std::vector<int> base_colouring;
  bool cellular_match = true;
  bool bigon_chain = false;
  int twist_number_cover = 0;
  Representativity representativity;
  bool wga = false;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const SignedScheme& scheme,
                       Representativity r = Representativity::infinite());

}  // namespace nsd
