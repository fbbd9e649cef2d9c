#pragma once

// Slopes on the cover torus, representativity in prism manifolds, verdicts
// and the volume bound.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsd/analysis.hpp"
#include "nsd/cover.hpp"
#include "nsd/scheme.hpp"

namespace nsd {

using Vec2 = std::array<long long, 2>;

/// Z^2 weight per cover edge, read in the direction from face_of(edge_half)
/// to face_of(mate(edge_half)). Summing weights along a closed dual walk
/// gives its homology class in a fixed basis.
struct H1Basis {
  std::vector<Vec2> edge_weight;
  std::array<int, 2> leftover_edges{};
  std::vector<int> tree_edges;
  std::vector<int> cotree_edges;
};

H1Basis internal_h1_basis(const CoverDiagram& cover, const FaceSet& fs);

/// Closed dual walk: face f_i, then edge e_i into face f_{i+1}, wrapping.
struct DualCycle {
  std::vector<std::pair<int, int>> steps;  // (face, edge)
};

struct PrismMarking {
  DualCycle m;
  DualCycle l;
};

PrismMarking parse_marking(std::istream& in, const std::string& file_name = "<marking>");
PrismMarking load_marking(const std::string& path);
std::string to_text(const PrismMarking& marking);

/// Homology class of a dual cycle; throws InvalidMarking if it is not a
/// closed walk in the dual graph.
Vec2 dual_cycle_class(const CoverDiagram& cover, const FaceSet& fs,
                      const std::vector<Vec2>& edge_weight, const DualCycle& cycle);

/// The dual loops through the two leftover edges, which form a basis.
PrismMarking basis_marking(const CoverDiagram& cover, const FaceSet& fs, const H1Basis& basis);

struct Slope {
  long long p = 0;
  long long q = 0;
  bool operator==(const Slope&) const = default;
  auto operator<=>(const Slope&) const = default;
};

class SlopeEngine {
 public:
  /// Throws NotTorus unless the cover is a torus, InvalidMarking unless the
  /// marking is a basis.
  SlopeEngine(const SignedScheme& scheme, const PrismMarking& marking);

  const CoverDiagram& cover() const { return cover_; }
  const FaceSet& faces() const { return faces_; }
  const H1Basis& basis() const { return basis_; }
  Vec2 m_class() const { return m_; }
  Vec2 l_class() const { return l_; }
  Vec2 slope_class(const Slope& s) const;

  /// Fewest diagram edges crossed by a closed dual walk in the slope's class.
  int min_intersection(const Slope& s) const;

  /// Algebraic intersections of the marking cycles with each component of
  /// the lifted link: (with m, with l).
  const std::vector<Vec2>& component_pairings() const { return pairings_; }
  /// Sum over components of |p<m,c> + q<l,c>|; a lower bound for the above.
  long long algebraic_lower_bound(const Slope& s) const;

 private:
  CoverDiagram cover_;
  FaceSet faces_;
  H1Basis basis_;
  PrismMarking marking_;
  Vec2 m_{};
  Vec2 l_{};
  std::vector<Vec2> pairings_;
};

int min_slope_intersection(const SignedScheme& scheme, const PrismMarking& marking, const Slope& s);

/// Independent check: a second tree-cotree basis and layered reachability
/// in a bounded box of the periodic dual graph.
int oracle_min_slope_intersection(const SignedScheme& scheme, const PrismMarking& marking,
                                  const Slope& s);

// ---------------------------------------------------------------------------

struct Ambient {
  enum class Kind { TwistedIBundle, Prism, Generic } kind = Kind::TwistedIBundle;
  Slope slope;
  std::optional<PrismMarking> marking;
  /// Generic ambients only: the representativity, if known.
  std::optional<Representativity> representativity;

  static Ambient twisted_i_bundle() { return {}; }
  static Ambient prism(Slope s, std::optional<PrismMarking> marking) {
    return {Kind::Prism, s, std::move(marking), std::nullopt};
  }
  std::string name() const;
};

Representativity representativity(const SignedScheme& scheme, const Ambient& ambient);

bool klein_bottly(const SignedScheme& scheme);

struct Assumptions {
  bool geometrically_prime = false;
  /// M cut along S is atoroidal with no essential annulus meeting the boundary.
  bool complement_atoroidal_anannular = false;
};

struct Hypothesis {
  std::string name;
  bool holds = false;
  bool operator==(const Hypothesis&) const = default;
};

struct Verdict {
  enum class Outcome { Hyperbolic, NotHyperbolic, Inconclusive } outcome = Outcome::Inconclusive;
  /// a: representativity above four; b: projective plane; c: twisted I-bundle;
  /// d: Klein-bottly knot in a prism manifold; e: none applies.
  char branch = 'e';
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> assumptions_used;
  Representativity representativity;
};

std::string to_string(Verdict::Outcome outcome);

Verdict verdict(const SignedScheme& scheme, const Ambient& ambient, const Assumptions& assumptions = {});

struct SlopeReport {
  Slope slope;
  int intersection = 0;
};

struct ExceptionalSlopes {
  int bound = 0;
  std::vector<SlopeReport> slopes;  // r <= 4, sorted
  int skipped_by_lower_bound = 0;
  /// Every slope outside the box provably has r > 4.
  bool complete = false;
};

ExceptionalSlopes exceptional_slopes(const SignedScheme& scheme, const PrismMarking& marking,
                                     int bound, int threads = 0);

// ---------------------------------------------------------------------------

/// Volume of the regular ideal octahedron.
inline constexpr double kV8 = 3.663862376708876;

/// (v8 / 4) (tw - 2 chi(S) - 2 chi(dM)), clamped at 0.
double volume_formula(int twist_number, int chi_surface, int chi_boundary);

struct VolumeBound {
  double value = 0.0;
  int twist_number = 0;
  int chi_surface = 0;
  int chi_boundary = 0;
  bool hypotheses_met = false;
};

VolumeBound volume_lower_bound(const SignedScheme& scheme, int chi_boundary,
                               const Ambient& ambient = Ambient::twisted_i_bundle(),
                               const Assumptions& assumptions = {});

}  // namespace nsd
