#include "nsd/cell_map.hpp"

#include <cassert>

namespace nsd {

namespace {

int dart_id(const BaseDart& d) { return 2 * d.half_edge + (d.orientation < 0 ? 1 : 0); }

BaseDart next_dart(const SignedScheme& s, const BaseDart& d) {
  int g = s.mate(d.half_edge);
  int orientation = d.orientation * s.sign(d.half_edge);
  int slot = (slot_of(g) + (orientation > 0 ? 1 : 3)) % 4;
  return {half_edge(crossing_of(g), slot), orientation};
}

// The same corner walked the other way round.
BaseDart reverse_dart(const BaseDart& d) {
  int v = crossing_of(d.half_edge);
  int a = slot_of(d.half_edge);
  if (d.orientation > 0) return {half_edge(v, (a + 3) % 4), -1};
  return {half_edge(v, (a + 1) % 4), 1};
}

}  // namespace

std::vector<std::vector<BaseDart>> trace_base_faces(const SignedScheme& scheme) {
  std::vector<std::vector<BaseDart>> out;
  std::vector<char> seen(2 * scheme.half_edge_count(), 0);
  auto trace = [&](BaseDart start, std::vector<BaseDart>* walk) {
    BaseDart d = start;
    do {
      assert(!seen[dart_id(d)]);
      seen[dart_id(d)] = 1;
      if (walk) walk->push_back(d);
      d = next_dart(scheme, d);
    } while (!(d == start));
  };
  for (int id = 0; id < 2 * scheme.half_edge_count(); ++id) {
    if (seen[id]) continue;
    BaseDart start{id / 2, id % 2 == 0 ? 1 : -1};
    std::vector<BaseDart> walk;
    trace(start, &walk);
    trace(reverse_dart(start), nullptr);
    out.push_back(std::move(walk));
  }
  return out;
}

CellMap base_cell_map(const SignedScheme& scheme) {
  CellMap m;
  m.vertex_count = scheme.crossing_count();
  m.edge_ends.resize(scheme.edge_count());
  for (int e = 0; e < scheme.edge_count(); ++e) {
    int h = scheme.edge_half(e);
    m.edge_ends[e] = {crossing_of(h), crossing_of(scheme.mate(h))};
  }
  m.side_location.assign(2 * scheme.edge_count(), {-1, -1});
  std::vector<int> occurrences(scheme.edge_count(), 0);
  auto walks = trace_base_faces(scheme);
  for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
    std::vector<int> sides;
    std::vector<int> corners;
    for (const BaseDart& d : walks[f]) {
      int e = scheme.edge_of(d.half_edge);
      int side = 2 * e + occurrences[e]++;
      assert(occurrences[e] <= 2);
      m.side_location[side] = {f, static_cast<int>(sides.size())};
      sides.push_back(side);
      corners.push_back(crossing_of(d.half_edge));
    }
    m.face_sides.push_back(std::move(sides));
    m.face_corner_vertex.push_back(std::move(corners));
  }
  return m;
}

CellMap cover_cell_map(const CoverDiagram& cover, const FaceSet& fs) {
  CellMap m;
  m.vertex_count = cover.crossing_count();
  m.edge_ends.resize(cover.edge_count());
  for (int e = 0; e < cover.edge_count(); ++e) {
    int h = cover.edge_half(e);
    m.edge_ends[e] = {CoverDiagram::vertex_of(h), CoverDiagram::vertex_of(cover.mate(h))};
  }
  m.side_location.assign(2 * cover.edge_count(), {-1, -1});
  for (int f = 0; f < fs.size(); ++f) {
    std::vector<int> sides;
    std::vector<int> corners;
    for (int d : fs.faces[f]) {
      int e = cover.edge_of(d);
      int side = 2 * e + (cover.edge_half(e) == d ? 0 : 1);
      m.side_location[side] = {f, static_cast<int>(sides.size())};
      sides.push_back(side);
      corners.push_back(CoverDiagram::vertex_of(d));
    }
    m.face_sides.push_back(std::move(sides));
    m.face_corner_vertex.push_back(std::move(corners));
  }
  return m;
}

}  // namespace nsd
