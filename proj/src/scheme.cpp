#include "nsd/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "nsd/cover.hpp"
#include "nsd/error.hpp"

namespace nsd {

int SurfaceId::genus() const {
  return orientable ? (2 - euler_characteristic) / 2 : 2 - euler_characteristic;
}

std::string SurfaceId::name() const {
  if (orientable) {
    if (euler_characteristic == 2) return "sphere";
    if (euler_characteristic == 0) return "torus";
    return "orientable genus " + std::to_string(genus());
  }
  if (euler_characteristic == 1) return "projective plane";
  if (euler_characteristic == 0) return "Klein bottle";
  return "nonorientable genus " + std::to_string(genus());
}

SignedScheme SignedScheme::validate(const RawScheme& raw) {
  const int n = raw.crossings;
  if (n <= 0) throw Error(ErrorKind::EmptyDiagram, "a diagram needs at least one crossing");
  if (static_cast<int>(raw.over.size()) != n) {
    throw Error(ErrorKind::MalformedMatching, "expected one over flag per crossing");
  }
  SignedScheme s;
  s.mate_.assign(4 * n, -1);
  s.sign_.assign(4 * n, 0);
  auto check_slot = [n](const Slot& slot) {
    if (slot.crossing < 0 || slot.crossing >= n || slot.index < 0 || slot.index > 3) {
      std::ostringstream os;
      os << "slot (" << slot.crossing << "," << slot.index << ") out of range";
      throw Error(ErrorKind::SlotOutOfRange, os.str());
    }
  };
  for (const RawEdge& e : raw.edges) {
    check_slot(e.a);
    check_slot(e.b);
    if (e.sign != 1 && e.sign != -1) {
      throw Error(ErrorKind::MalformedMatching, "edge sign must be +1 or -1");
    }
    const int ha = half_edge(e.a.crossing, e.a.index);
    const int hb = half_edge(e.b.crossing, e.b.index);
    if (ha == hb) throw Error(ErrorKind::MalformedMatching, "slot matched to itself");
    for (int h : {ha, hb}) {
      if (s.mate_[h] != -1) {
        std::ostringstream os;
        os << "slot (" << crossing_of(h) << "," << slot_of(h) << ") matched more than once";
        throw Error(ErrorKind::MalformedMatching, os.str());
      }
    }
    s.mate_[ha] = hb;
    s.mate_[hb] = ha;
    s.sign_[ha] = s.sign_[hb] = static_cast<int8_t>(e.sign);
  }
  for (int h = 0; h < 4 * n; ++h) {
    if (s.mate_[h] == -1) {
      std::ostringstream os;
      os << "slot (" << crossing_of(h) << "," << slot_of(h) << ") is unmatched";
      throw Error(ErrorKind::MalformedMatching, os.str());
    }
  }
  s.over_.resize(n);
  for (int v = 0; v < n; ++v) {
    if (raw.over[v] != 0 && raw.over[v] != 1) {
      throw Error(ErrorKind::MalformedMatching, "over flag must be 0 or 1");
    }
    s.over_[v] = static_cast<uint8_t>(raw.over[v]);
  }

  // The projection surface is connected, so the diagram graph must be too.
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = 0; a < 4; ++a) {
      int w = crossing_of(s.mate_[half_edge(v, a)]);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::DisconnectedDiagram, "diagram graph is disconnected");

  s.edge_of_.assign(4 * n, -1);
  for (int h = 0; h < 4 * n; ++h) {
    if (h < s.mate_[h]) {
      s.edge_of_[h] = s.edge_of_[s.mate_[h]] = static_cast<int>(s.edge_half_.size());
      s.edge_half_.push_back(h);
    }
  }
  s.declared_ = raw.surface;
  return s;
}

SignedScheme SignedScheme::with_declared_surface(std::optional<SurfaceId> surface) const {
  SignedScheme copy = *this;
  copy.declared_ = surface;
  return copy;
}

RawScheme SignedScheme::raw() const {
  RawScheme r;
  r.crossings = crossing_count();
  for (int e = 0; e < edge_count(); ++e) {
    int h = edge_half_[e];
    int g = mate_[h];
    r.edges.push_back({{crossing_of(h), slot_of(h)}, {crossing_of(g), slot_of(g)}, sign_[h]});
  }
  r.over.assign(over_.begin(), over_.end());
  r.surface = declared_;
  return r;
}

bool is_orientable(const SignedScheme& scheme) {
  const int n = scheme.crossing_count();
  std::vector<int> orient(n, 0);
  std::vector<int> stack{0};
  orient[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = 0; a < 4; ++a) {
      int h = half_edge(v, a);
      int w = crossing_of(scheme.mate(h));
      int want = orient[v] * scheme.sign(h);
      if (orient[w] == 0) {
        orient[w] = want;
        stack.push_back(w);
      } else if (orient[w] != want) {
        return false;
      }
    }
  }
  return true;
}

SurfaceId surface_of(const SignedScheme& scheme) {
  CoverDiagram cover = CoverDiagram::lift(scheme);
  FaceSet fs = faces(cover);
  return SurfaceId{is_orientable(scheme),
                   static_cast<int>(fs.faces.size()) / 2 - scheme.crossing_count()};
}

SurfaceReport surface_report(const SignedScheme& scheme) {
  SurfaceReport r;
  r.surface = surface_of(scheme);
  r.declared_mismatch = scheme.declared_surface() && *scheme.declared_surface() != r.surface;
  return r;
}

int ComponentInfo::distinct_crossings() const {
  std::set<int> s(crossing_visits.begin(), crossing_visits.end());
  return static_cast<int>(s.size());
}

std::vector<ComponentInfo> components(const SignedScheme& scheme) {
  std::vector<ComponentInfo> out;
  std::vector<char> used(scheme.edge_count(), 0);
  for (int start = 0; start < scheme.half_edge_count(); ++start) {
    if (used[scheme.edge_of(start)]) continue;
    ComponentInfo info;
    info.id = static_cast<int>(out.size());
    int product = 1;
    int h = start;
    do {
      used[scheme.edge_of(h)] = 1;
      product *= scheme.sign(h);
      info.departures.push_back(h);
      int arrival = scheme.mate(h);
      info.crossing_visits.push_back(crossing_of(arrival));
      h = strand_partner(arrival);
    } while (h != start);
    info.one_sided = product < 0;
    out.push_back(std::move(info));
  }
  return out;
}

namespace {

SignedScheme rebuild(const SignedScheme& original, const std::vector<int>& map_half_edge,
                     const std::vector<int>& new_sign, const std::vector<int>& new_over) {
  RawScheme r;
  r.crossings = original.crossing_count();
  for (int e = 0; e < original.edge_count(); ++e) {
    int h = original.edge_half(e);
    int g = original.mate(h);
    int mh = map_half_edge[h];
    int mg = map_half_edge[g];
    r.edges.push_back({{crossing_of(mh), slot_of(mh)}, {crossing_of(mg), slot_of(mg)}, new_sign[e]});
  }
  r.over = new_over;
  r.surface = original.declared_surface();
  return SignedScheme::validate(r);
}

}  // namespace

SignedScheme switch_crossing(const SignedScheme& scheme, int v) {
  const int n = scheme.crossing_count();
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::CrossingOutOfRange, "crossing " + std::to_string(v) + " out of range");
  }
  std::vector<int> map(scheme.half_edge_count());
  std::iota(map.begin(), map.end(), 0);
  for (int a = 0; a < 4; ++a) map[half_edge(v, a)] = half_edge(v, (4 - a) % 4);
  std::vector<int> signs(scheme.edge_count());
  for (int e = 0; e < scheme.edge_count(); ++e) {
    int h = scheme.edge_half(e);
    int s = scheme.sign(h);
    bool touches = crossing_of(h) == v || crossing_of(scheme.mate(h)) == v;
    if (touches && !scheme.is_loop(h)) s = -s;
    signs[e] = s;
  }
  std::vector<int> over(n);
  for (int w = 0; w < n; ++w) over[w] = scheme.over_parity(w) ^ (w == v ? 1 : 0);
  return rebuild(scheme, map, signs, over);
}

SignedScheme relabel(const SignedScheme& scheme, const std::vector<int>& permutation,
                     const std::vector<int>& rotation) {
  const int n = scheme.crossing_count();
  if (static_cast<int>(permutation.size()) != n || static_cast<int>(rotation.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "relabel needs one entry per crossing");
  }
  std::vector<int> check = permutation;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i) {
    if (check[i] != i) throw Error(ErrorKind::InvalidArgument, "not a permutation");
  }
  std::vector<int> map(scheme.half_edge_count());
  for (int h = 0; h < scheme.half_edge_count(); ++h) {
    int v = crossing_of(h);
    int k = ((rotation[v] % 4) + 4) % 4;
    map[h] = half_edge(permutation[v], (slot_of(h) + k) % 4);
  }
  std::vector<int> signs(scheme.edge_count());
  for (int e = 0; e < scheme.edge_count(); ++e) signs[e] = scheme.sign(scheme.edge_half(e));
  std::vector<int> over(n);
  for (int v = 0; v < n; ++v) over[permutation[v]] = scheme.over_parity(v) ^ (((rotation[v] % 2) + 2) % 2);
  // Edge order changes with the relabelling; rebuild sorts it out.
  return rebuild(scheme, map, signs, over);
}

SignedScheme mirror(const SignedScheme& scheme) {
  RawScheme r = scheme.raw();
  for (int& o : r.over) o ^= 1;
  return SignedScheme::validate(r);
}

SignedScheme shadow_of(const SignedScheme& scheme) {
  RawScheme r = scheme.raw();
  std::fill(r.over.begin(), r.over.end(), 0);
  return SignedScheme::validate(r);
}

}  // namespace nsd
