#pragma once

// Signed embedding schemes for link diagrams on closed surfaces.
//
// A crossing v owns half-edge slots 4v+0 .. 4v+3. Their cyclic order 0,1,2,3
// is the reference local orientation at v. Edges pair up slots and carry a
// sign; -1 means the reference orientations disagree across the edge.
// Strands pass straight through a crossing: slot a continues at slot a+2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nsd {

inline constexpr int half_edge(int crossing, int slot) { return 4 * crossing + slot; }
inline constexpr int crossing_of(int h) { return h / 4; }
inline constexpr int slot_of(int h) { return h % 4; }
inline constexpr int strand_partner(int h) { return 4 * (h / 4) + (h % 4 + 2) % 4; }

struct SurfaceId {
  bool orientable = true;
  int euler_characteristic = 2;

  /// Genus for orientable surfaces, crosscap number otherwise.
  int genus() const;
  std::string name() const;

  bool operator==(const SurfaceId&) const = default;
};

struct Slot {
  int crossing = 0;
  int index = 0;
  bool operator==(const Slot&) const = default;
};

struct RawEdge {
  Slot a;
  Slot b;
  int sign = 1;
};

/// Unvalidated scheme data, as produced by a parser or a generator.
struct RawScheme {
  int crossings = 0;
  std::vector<RawEdge> edges;
  std::vector<int> over;  // one bit per crossing
  std::optional<SurfaceId> surface;
};

class SignedScheme {
 public:
  /// Checks every structural invariant; throws nsd::Error on violation.
  static SignedScheme validate(const RawScheme& raw);

  int crossing_count() const { return static_cast<int>(over_.size()); }
  int half_edge_count() const { return static_cast<int>(mate_.size()); }
  int edge_count() const { return half_edge_count() / 2; }

  int mate(int h) const { return mate_[h]; }
  int sign(int h) const { return sign_[h]; }
  int over_parity(int v) const { return over_[v]; }
  bool is_loop(int h) const { return crossing_of(mate_[h]) == crossing_of(h); }

  /// Edges are numbered by their lower half-edge, in increasing order.
  int edge_of(int h) const { return edge_of_[h]; }
  int edge_half(int e) const { return edge_half_[e]; }

  const std::optional<SurfaceId>& declared_surface() const { return declared_; }
  SignedScheme with_declared_surface(std::optional<SurfaceId> s) const;

  RawScheme raw() const;

  bool operator==(const SignedScheme&) const = default;

 private:
  SignedScheme() = default;

  std::vector<int> mate_;
  std::vector<int8_t> sign_;
  std::vector<uint8_t> over_;
  std::vector<int> edge_of_;
  std::vector<int> edge_half_;
  std::optional<SurfaceId> declared_;
};

/// Status of the strand leaving through half-edge h, seen with local
/// orientation `orientation` (+1 reference, -1 reversed). True means over.
inline bool strand_is_over(const SignedScheme& s, int h, int orientation) {
  int bit = (slot_of(h) % 2) ^ s.over_parity(crossing_of(h)) ^ (orientation < 0 ? 1 : 0);
  return bit == 0;
}

bool is_orientable(const SignedScheme& scheme);

struct SurfaceReport {
  SurfaceId surface;
  bool declared_mismatch = false;
};

SurfaceId surface_of(const SignedScheme& scheme);
SurfaceReport surface_report(const SignedScheme& scheme);

struct ComponentInfo {
  int id = 0;
  std::vector<int> departures;       // half-edges left along one lap, in order
  std::vector<int> crossing_visits;  // crossing reached after each departure
  bool one_sided = false;
  int crossing_visit_count() const { return static_cast<int>(crossing_visits.size()); }
  int distinct_crossings() const;
};

std::vector<ComponentInfo> components(const SignedScheme& scheme);

/// Reverses the local orientation at crossing v.
SignedScheme switch_crossing(const SignedScheme& scheme, int v);

/// Crossing v becomes permutation[v]; its slot a becomes (a + rotation[v]) mod 4.
SignedScheme relabel(const SignedScheme& scheme, const std::vector<int>& permutation,
                     const std::vector<int>& rotation);

/// Flips every crossing.
SignedScheme mirror(const SignedScheme& scheme);

/// Same scheme with all over data cleared.
SignedScheme shadow_of(const SignedScheme& scheme);

}  // namespace nsd
