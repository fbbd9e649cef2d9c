#include <algorithm>
#include <map>
#include <numeric>

#include "nsd/analysis.hpp"

namespace nsd {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool strictly_between(int x, int from, int to, int length) {
  // x in the open cyclic interval (from, to)
  int dx = (x - from + length) % length;
  int dt = (to - from + length) % length;
  return dx > 0 && dx < dt;
}

class CurveCutter {
 public:
  explicit CurveCutter(const CellMap& map) : map_(map) {
    offset_.resize(map.face_count() + 1, 0);
    for (int f = 0; f < map.face_count(); ++f) {
      offset_[f + 1] = offset_[f] + static_cast<int>(map.face_sides[f].size());
    }
    vertex_corners_.resize(map.vertex_count);
    for (int f = 0; f < map.face_count(); ++f) {
      for (int p = 0; p < static_cast<int>(map.face_sides[f].size()); ++p) {
        vertex_corners_[map.face_corner_vertex[f][p]].push_back(corner(f, p));
      }
    }
  }

  // The curve crosses from side o1^1 into face(o1), runs to side o2, crosses
  // into face(o2^1) and runs back to o1^1.
  std::optional<CompositeWitness> evaluate(int o1, int o2) const {
    const auto [face_a, ia] = map_.side_location[o1];
    const auto [face_a2, ja] = map_.side_location[o2];
    const auto [face_b, ib] = map_.side_location[o1 ^ 1];
    const auto [face_b2, jb] = map_.side_location[o2 ^ 1];
    if (face_a != face_a2 || face_b != face_b2) return std::nullopt;
    const int e1 = o1 / 2;
    const int e2 = o2 / 2;
    if (e1 == e2) return std::nullopt;
    const int len_a = length(face_a);
    if (face_a == face_b) {
      // Both arcs live in one disc; interleaved endpoints cannot be embedded.
      bool jb_inside = strictly_between(jb, ia, ja, len_a);
      bool ib_inside = strictly_between(ib, ia, ja, len_a);
      if (jb_inside != ib_inside) return std::nullopt;
    }

    UnionFind uf(offset_.back());
    for (const auto& corners : vertex_corners_) {
      for (size_t k = 1; k < corners.size(); ++k) uf.unite(corners[0], corners[k]);
    }
    for (int f = 0; f < map_.face_count(); ++f) {
      if (f == face_a || f == face_b) continue;
      for (int p = 1; p < length(f); ++p) uf.unite(corner(f, 0), corner(f, p));
    }
    std::vector<int> regions;
    if (face_a == face_b) {
      cut_face(face_a, {{ia, ja}, {jb, ib}}, uf, regions);
    } else {
      cut_face(face_a, {{ia, ja}}, uf, regions);
      cut_face(face_b, {{jb, ib}}, uf, regions);
    }

    const int side1 = uf.find(corner(face_a, (ia + 1) % len_a));
    const int side2 = uf.find(corner(face_a, (ja + 1) % len_a));
    if (side1 == side2) return std::nullopt;  // nonseparating

    struct Tally {
      int vertices = 0, edges = 0, faces = 0;
      int chi() const { return vertices - edges + faces; }
    };
    std::map<int, Tally> tally{{side1, {}}, {side2, {}}};
    auto add = [&](int root, int Tally::*field) {
      auto it = tally.find(root);
      if (it != tally.end()) ++(it->second.*field);
    };
    auto vertex_root = [&](int v) { return uf.find(vertex_corners_[v].front()); };
    for (int v = 0; v < map_.vertex_count; ++v) add(vertex_root(v), &Tally::vertices);
    for (int e = 0; e < map_.edge_count(); ++e) {
      if (e == e1 || e == e2) {
        add(vertex_root(map_.edge_ends[e][0]), &Tally::edges);
        add(vertex_root(map_.edge_ends[e][1]), &Tally::edges);
      } else {
        add(vertex_root(map_.edge_ends[e][0]), &Tally::edges);
      }
    }
    for (int f = 0; f < map_.face_count(); ++f) {
      if (f != face_a && f != face_b) add(uf.find(corner(f, 0)), &Tally::faces);
    }
    for (int c : regions) add(uf.find(c), &Tally::faces);

    const Tally& t1 = tally[side1];
    const Tally& t2 = tally[side2];
    const bool disc1 = t1.chi() == 1;
    const bool disc2 = t2.chi() == 1;
    const bool trivial1 = disc1 && t1.vertices == 0;
    const bool trivial2 = disc2 && t2.vertices == 0;
    CompositeWitness w{e1, e2, face_a, face_b, 0};
    if (disc1 && t1.vertices > 0 && !trivial2) {
      w.crossings_inside = t1.vertices;
      return w;
    }
    if (disc2 && t2.vertices > 0 && !trivial1) {
      w.crossings_inside = t2.vertices;
      return w;
    }
    return std::nullopt;
  }

 private:
  int corner(int f, int p) const { return offset_[f] + p; }
  int length(int f) const { return static_cast<int>(map_.face_sides[f].size()); }

  // Splits face f along non-crossing chords between boundary positions. The
  // chord endpoint at position p sits inside the edge side at p. Corners of
  // each resulting region are united; one representative corner per region
  // is appended to `regions`.
  void cut_face(int f, const std::vector<std::pair<int, int>>& chords, UnionFind& uf,
                std::vector<int>& regions) const {
    const int len = length(f);
    std::map<int, int> partner;
    for (auto [p, q] : chords) {
      partner[p] = q;
      partner[q] = p;
    }
    std::vector<int> cuts;
    for (auto& [p, q] : partner) cuts.push_back(p);
    const int m = static_cast<int>(cuts.size());
    // Segment k starts after cut k and ends at the next cut.
    std::map<int, int> segment_of_cut;
    for (int k = 0; k < m; ++k) segment_of_cut[cuts[k]] = k;
    UnionFind local(m);
    for (int k = 0; k < m; ++k) {
      int start = cuts[k];
      int end = cuts[(k + 1) % m];
      int first = corner(f, (start + 1) % len);
      int t = (start + 1) % len;
      while (true) {
        uf.unite(corner(f, t), first);
        if (t == end) break;
        t = (t + 1) % len;
      }
      int continued = segment_of_cut[partner[end]];
      local.unite(k, continued);
      uf.unite(first, corner(f, (cuts[continued] + 1) % len));
    }
    for (int k = 0; k < m; ++k) {
      if (local.find(k) == k) regions.push_back(corner(f, (cuts[k] + 1) % len));
    }
  }

  const CellMap& map_;
  std::vector<int> offset_;
  std::vector<std::vector<int>> vertex_corners_;
};

}  // namespace

std::optional<CompositeWitness> find_composite_curve(const CellMap& map) {
  CurveCutter cutter(map);
  for (int f = 0; f < map.face_count(); ++f) {
    const auto& sides = map.face_sides[f];
    for (size_t i = 0; i < sides.size(); ++i) {
      for (size_t j = i + 1; j < sides.size(); ++j) {
        if (auto w = cutter.evaluate(sides[i], sides[j])) return w;
      }
    }
  }
  return std::nullopt;
}

bool weakly_prime(const SignedScheme& scheme) {
  return !find_composite_curve(base_cell_map(scheme)).has_value();
}

bool weakly_prime(const CoverDiagram& cover) {
  return !find_composite_curve(cover_cell_map(cover, faces(cover))).has_value();
}

}  // namespace nsd
