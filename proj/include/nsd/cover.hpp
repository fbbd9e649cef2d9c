#pragma once

// Orientable double cover of a signed scheme.
//
// Cover crossing (v, sheet) has id 2v + sheet, sheet 0 being "+" and 1 "-".
// Cover half-edge ids are 4 * (2v + sheet) + a, where a is the base slot.
// On sheet 0 the rotation is 0,1,2,3; on sheet 1 it is 0,3,2,1. The deck
// transformation swaps sheets and keeps slots, so tau(H) = H ^ 4.

#include <vector>

#include "nsd/scheme.hpp"

namespace nsd {

class CoverDiagram {
 public:
  static CoverDiagram lift(const SignedScheme& base);

  const SignedScheme& base() const { return base_; }
  int base_crossing_count() const { return base_.crossing_count(); }
  int crossing_count() const { return 2 * base_.crossing_count(); }
  int half_edge_count() const { return static_cast<int>(mate_.size()); }
  int edge_count() const { return half_edge_count() / 2; }

  int mate(int h) const { return mate_[h]; }
  int over_parity(int cv) const { return over_[cv]; }

  static int vertex_of(int h) { return h / 4; }
  static int sheet_of_vertex(int cv) { return cv % 2; }
  static int base_crossing_of_vertex(int cv) { return cv / 2; }
  static int base_half_edge(int h) { return 4 * (h / 8) + h % 4; }
  static int tau(int h) { return h ^ 4; }
  static int tau_vertex(int cv) { return cv ^ 1; }

  int rot_succ(int h) const {
    int a = h % 4;
    int step = sheet_of_vertex(vertex_of(h)) == 0 ? 1 : 3;
    return h - a + (a + step) % 4;
  }
  int rot_pred(int h) const {
    int a = h % 4;
    int step = sheet_of_vertex(vertex_of(h)) == 0 ? 3 : 1;
    return h - a + (a + step) % 4;
  }
  /// Strand continuation through a crossing (slot a to a+2).
  static int straight(int h) { return h - h % 4 + (h % 4 + 2) % 4; }

  /// True when the strand leaving through h is the over-strand.
  bool is_over(int h) const { return ((h % 4) % 2 ^ over_[vertex_of(h)]) == 0; }

  int edge_of(int h) const { return edge_of_[h]; }
  int edge_half(int e) const { return edge_half_[e]; }

  /// The cover as a plain scheme: all signs +1, sheet-1 slots relabelled
  /// a -> (4 - a) mod 4 so that every rotation is the reference order.
  SignedScheme as_scheme() const;
  /// Half-edge id of H in as_scheme().
  static int scheme_half_edge(int h) {
    int cv = h / 4;
    int a = h % 4;
    return 4 * cv + (cv % 2 == 0 ? a : (4 - a) % 4);
  }

 private:
  explicit CoverDiagram(SignedScheme base) : base_(std::move(base)) {}

  SignedScheme base_;
  std::vector<int> mate_;
  std::vector<int> over_;
  std::vector<int> edge_of_;
  std::vector<int> edge_half_;
};

/// Faces of the cover as dart cycles. A dart is an outgoing half-edge and
/// next(d) = rot_succ(mate(d)). Position i of a face is preceded by the
/// corner between rot_pred(d_i) and d_i.
struct FaceSet {
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of;      // per dart
  std::vector<int> position_of;  // per dart
  std::vector<int> tau_partner;  // per face

  int size() const { return static_cast<int>(faces.size()); }
  int length(int f) const { return static_cast<int>(faces[f].size()); }
};

FaceSet faces(const CoverDiagram& cover);

/// Dart of face tau(face_of(d)) that traverses tau's image of d's edge.
int tau_dart(const CoverDiagram& cover, int dart);

int euler_characteristic(const CoverDiagram& cover, const FaceSet& fs);
bool is_connected(const CoverDiagram& cover);

struct CoverComponent {
  std::vector<int> departures;  // cover half-edges
  int base_component = 0;
};

std::vector<CoverComponent> lifted_components(const CoverDiagram& cover);

}  // namespace nsd
