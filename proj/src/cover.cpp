#include "nsd/cover.hpp"

#include <cassert>

#include "nsd/error.hpp"

namespace nsd {

CoverDiagram CoverDiagram::lift(const SignedScheme& base) {
  CoverDiagram c(base);
  const int n = base.crossing_count();
  c.mate_.assign(8 * n, -1);
  c.over_.assign(2 * n, 0);
  for (int v = 0; v < n; ++v) {
    for (int sheet = 0; sheet < 2; ++sheet) {
      const int cv = 2 * v + sheet;
      c.over_[cv] = base.over_parity(v) ^ sheet;
      for (int a = 0; a < 4; ++a) {
        int h = half_edge(v, a);
        int g = base.mate(h);
        int target_sheet = base.sign(h) > 0 ? sheet : 1 - sheet;
        c.mate_[4 * cv + a] = 4 * (2 * crossing_of(g) + target_sheet) + slot_of(g);
      }
    }
  }
  c.edge_of_.assign(8 * n, -1);
  for (int h = 0; h < 8 * n; ++h) {
    if (h < c.mate_[h]) {
      c.edge_of_[h] = c.edge_of_[c.mate_[h]] = static_cast<int>(c.edge_half_.size());
      c.edge_half_.push_back(h);
    }
  }
  return c;
}

SignedScheme CoverDiagram::as_scheme() const {
  RawScheme r;
  r.crossings = crossing_count();
  for (int e = 0; e < edge_count(); ++e) {
    int h = scheme_half_edge(edge_half_[e]);
    int g = scheme_half_edge(mate_[edge_half_[e]]);
    r.edges.push_back({{crossing_of(h), slot_of(h)}, {crossing_of(g), slot_of(g)}, 1});
  }
  r.over = over_;
  return SignedScheme::validate(r);
}

FaceSet faces(const CoverDiagram& cover) {
  FaceSet fs;
  const int darts = cover.half_edge_count();
  fs.face_of.assign(darts, -1);
  fs.position_of.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (fs.face_of[start] != -1) continue;
    const int f = fs.size();
    std::vector<int> walk;
    int d = start;
    do {
      fs.face_of[d] = f;
      fs.position_of[d] = static_cast<int>(walk.size());
      walk.push_back(d);
      d = cover.rot_succ(cover.mate(d));
    } while (d != start);
    fs.faces.push_back(std::move(walk));
  }
  fs.tau_partner.resize(fs.size());
  for (int f = 0; f < fs.size(); ++f) {
    // tau maps the corner before d to the corner before rot_succ(tau(d)).
    int d = fs.faces[f][0];
    fs.tau_partner[f] = fs.face_of[cover.rot_succ(CoverDiagram::tau(d))];
    assert(fs.tau_partner[f] != f);
  }
  return fs;
}

int tau_dart(const CoverDiagram& cover, int dart) {
  return cover.mate(CoverDiagram::tau(dart));
}

int euler_characteristic(const CoverDiagram& cover, const FaceSet& fs) {
  return cover.crossing_count() - cover.edge_count() + fs.size();
}

bool is_connected(const CoverDiagram& cover) {
  const int m = cover.crossing_count();
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int cv = stack.back();
    stack.pop_back();
    for (int a = 0; a < 4; ++a) {
      int w = CoverDiagram::vertex_of(cover.mate(4 * cv + a));
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == m;
}

std::vector<CoverComponent> lifted_components(const CoverDiagram& cover) {
  std::vector<ComponentInfo> base_components = components(cover.base());
  std::vector<int> base_component_of_edge(cover.base().edge_count(), -1);
  for (const ComponentInfo& c : base_components) {
    for (int h : c.departures) base_component_of_edge[cover.base().edge_of(h)] = c.id;
  }
  std::vector<CoverComponent> out;
  std::vector<char> used(cover.edge_count(), 0);
  for (int start = 0; start < cover.half_edge_count(); ++start) {
    if (used[cover.edge_of(start)]) continue;
    CoverComponent comp;
    comp.base_component =
        base_component_of_edge[cover.base().edge_of(CoverDiagram::base_half_edge(start))];
    int h = start;
    do {
      used[cover.edge_of(h)] = 1;
      comp.departures.push_back(h);
      h = CoverDiagram::straight(cover.mate(h));
    } while (h != start);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace nsd
