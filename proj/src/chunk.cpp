#include "nsd/chunk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/error.hpp"

namespace nsd {

namespace {

int wrap(int x, int m) { return ((x % m) + m) % m; }

// Position of half-edge h in its vertex's rotation, counted from slot 0.
int rotation_index(int h) {
  int slot = h % 4;
  return CoverDiagram::sheet_of_vertex(CoverDiagram::vertex_of(h)) == 0 ? slot : (4 - slot) % 4;
}

int half_edge_at_rotation_index(int cv, int q) {
  return 4 * cv + (CoverDiagram::sheet_of_vertex(cv) == 0 ? q : (4 - q) % 4);
}

// 0 when the walk of face f leaves its corners along over-strands.
int over_under_type(const CoverDiagram& cover, const FaceSet& fs, int f) {
  return cover.is_over(fs.faces[f][0]) ? 0 : 1;
}

std::vector<int> pairing_targets(const CoverDiagram& cover, const FaceSet& fs, int f, int shift) {
  const auto& walk = fs.faces[f];
  const int partner = fs.tau_partner[f];
  const int len = fs.length(partner);
  std::vector<int> target;
  for (int d : walk) {
    int image = cover.mate(CoverDiagram::tau(d));
    target.push_back(wrap(fs.position_of[image] + shift, len));
  }
  return target;
}

struct Classes {
  std::vector<std::vector<int>> members;
  std::vector<int> class_of;
};

Classes edge_classes_of(const CoverDiagram& cover, const FaceSet& fs,
                        const std::vector<FacePairing>& pairings) {
  const int m = cover.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const FacePairing& p : pairings) {
    for (size_t i = 0; i < p.target.size(); ++i) {
      int a = cover.edge_of(fs.faces[p.face][i]);
      int b = cover.edge_of(fs.faces[p.partner][p.target[i]]);
      parent[find(a)] = find(b);
    }
  }
  std::map<int, int> index;
  Classes out;
  out.class_of.assign(m, -1);
  for (int e = 0; e < m; ++e) {
    auto [it, fresh] = index.emplace(find(e), static_cast<int>(out.members.size()));
    if (fresh) out.members.emplace_back();
    out.members[it->second].push_back(e);
    out.class_of[e] = it->second;
  }
  return out;
}

std::vector<int> glued_pairs(const CoverDiagram& cover, const std::vector<int>& class_of) {
  std::vector<int> out;
  for (int cv = 0; cv < cover.crossing_count(); ++cv) {
    int c[4];
    for (int a = 0; a < 4; ++a) c[a] = class_of[cover.edge_of(4 * cv + a)];
    bool even = c[0] == c[2];
    bool odd = c[1] == c[3];
    out.push_back(even && odd ? 2 : even ? 0 : odd ? 1 : -1);
  }
  return out;
}

}  // namespace

ChunkDecomposition build_chunk(const SignedScheme& scheme) {
  if (is_orientable(scheme)) {
    throw Error(ErrorKind::OrientableBase, "chunk decomposition needs a nonorientable surface");
  }
  if (!s_alternating(scheme)) throw Error(ErrorKind::NotAlternating, "diagram is not alternating");
  ChunkDecomposition chunk(CoverDiagram::lift(scheme));
  chunk.faces = faces(chunk.cover);
  CheckerboardResult col = checkerboard_cover(chunk.cover, chunk.faces);
  if (!col.colourable()) {
    throw Error(ErrorKind::NotColourable, "lifted diagram is not checkerboard colourable");
  }
  chunk.colour = *col.colouring;
  if (chunk.colour[0] != over_under_type(chunk.cover, chunk.faces, 0)) {
    for (int& c : chunk.colour) c ^= 1;
  }
  for (int f = 0; f < chunk.faces.size(); ++f) {
    FacePairing p;
    p.face = f;
    p.partner = chunk.faces.tau_partner[f];
    p.shift = chunk.colour[f] == 0 ? 1 : -1;
    p.target = pairing_targets(chunk.cover, chunk.faces, f, p.shift);
    chunk.pairings.push_back(std::move(p));
  }
  Classes classes = edge_classes_of(chunk.cover, chunk.faces, chunk.pairings);
  chunk.edge_classes = std::move(classes.members);
  chunk.class_of_edge = std::move(classes.class_of);
  chunk.glued_pair = glued_pairs(chunk.cover, chunk.class_of_edge);
  return chunk;
}

ChunkDecomposition flip_pairing_direction(const ChunkDecomposition& chunk, int face) {
  ChunkDecomposition out = chunk;
  FacePairing& p = out.pairings.at(face);
  p.shift = -p.shift;
  p.target = pairing_targets(out.cover, out.faces, face, p.shift);
  return out;
}

std::vector<std::string> validate_chunk(const ChunkDecomposition& chunk) {
  std::vector<std::string> problems;
  auto report = [&](std::string s) { problems.push_back(std::move(s)); };
  const CoverDiagram& cover = chunk.cover;
  const int k = cover.base_crossing_count();

  FaceSet fresh = faces(cover);
  if (fresh.faces != chunk.faces.faces || fresh.tau_partner != chunk.faces.tau_partner) {
    report("face set differs from a fresh trace of the boundary graph");
    return problems;
  }
  const FaceSet& fs = chunk.faces;
  const int F = fs.size();

  // Boundary graph bookkeeping against the flag oracle on the base.
  const int chi_boundary = cover.crossing_count() - cover.edge_count() + F;
  if (chi_boundary != 2 * oracle_faces(cover.base()).euler_characteristic()) {
    report("V - E + F of the boundary graph is not twice the base Euler characteristic");
  }

  if (static_cast<int>(chunk.colour.size()) != F) {
    report("colouring has the wrong length");
    return problems;
  }
  for (int e = 0; e < cover.edge_count(); ++e) {
    int h = cover.edge_half(e);
    if (chunk.colour[fs.face_of[h]] == chunk.colour[fs.face_of[cover.mate(h)]]) {
      report("edge " + std::to_string(e) + " has the same colour on both sides");
    }
  }
  for (int f = 0; f < F; ++f) {
    for (int d : fs.faces[f]) {
      if (cover.is_over(d) != (chunk.colour[f] == 0)) {
        report("face " + std::to_string(f) + " colour does not match its over/under walk");
        break;
      }
    }
  }

  if (static_cast<int>(chunk.pairings.size()) != F) {
    report("expected one pairing per face");
    return problems;
  }
  for (int f = 0; f < F; ++f) {
    const FacePairing& p = chunk.pairings[f];
    const std::string tag = "face " + std::to_string(f) + ": ";
    if (p.face != f || p.partner != fs.tau_partner[f] || p.partner == f) {
      report(tag + "not paired with its tau translate");
      continue;
    }
    if (p.shift != 1 && p.shift != -1) report(tag + "rotation is not a single step");
    if (p.shift != (chunk.colour[f] == 0 ? 1 : -1)) report(tag + "rotation direction does not match colour");
    const int len = fs.length(f);
    if (static_cast<int>(p.target.size()) != len || fs.length(p.partner) != len) {
      report(tag + "pairing is not a map onto the partner boundary");
      continue;
    }
    std::set<int> image(p.target.begin(), p.target.end());
    if (static_cast<int>(image.size()) != len || *image.begin() < 0 || *image.rbegin() >= len) {
      report(tag + "pairing is not a bijection");
    }
    for (int i = 0; i < len; ++i) {
      int d = fs.faces[f][i];
      int t = cover.mate(CoverDiagram::tau(d));
      if (fs.face_of[t] != p.partner || wrap(fs.position_of[t] + p.shift, len) != p.target[i]) {
        report(tag + "position " + std::to_string(i) + " is not tau followed by the rotation");
        break;
      }
    }
  }
  if (!problems.empty()) return problems;

  for (int f = 0; f < F; ++f) {
    const FacePairing& p = chunk.pairings[f];
    const FacePairing& q = chunk.pairings[p.partner];
    for (int i = 0; i < fs.length(f); ++i) {
      if (q.target[p.target[i]] != i) {
        report("gluing of face " + std::to_string(f) + " and face " + std::to_string(p.partner) +
               " is inconsistent at position " + std::to_string(i));
        break;
      }
    }
  }

  Classes classes = edge_classes_of(cover, fs, chunk.pairings);
  if (static_cast<int>(classes.members.size()) != k) {
    report("expected " + std::to_string(k) + " edge classes, found " +
           std::to_string(classes.members.size()));
  }
  for (const auto& cls : classes.members) {
    if (cls.size() != 4) {
      report("edge class of size " + std::to_string(cls.size()) + " containing edge " +
             std::to_string(cls.front()));
    }
  }
  if (classes.members != chunk.edge_classes) report("stored edge classes differ from recomputation");
  if (classes.class_of != chunk.class_of_edge) report("stored class lookup differs from recomputation");

  std::vector<int> pairs = glued_pairs(cover, classes.class_of);
  for (int cv = 0; cv < cover.crossing_count(); ++cv) {
    if (pairs[cv] == -1) report("ideal vertex " + std::to_string(cv) + " has no opposite pair glued");
  }
  if (pairs != chunk.glued_pair) report("stored opposite-pair record differs from recomputation");
  return problems;
}

// ---------------------------------------------------------------------------

TruncatedBoundary truncate(const ChunkDecomposition& chunk) {
  const CoverDiagram& cover = chunk.cover;
  const FaceSet& fs = chunk.faces;
  TruncatedBoundary tb;
  tb.face_count = fs.size();
  tb.square_count = cover.crossing_count();
  tb.interior_edges = cover.edge_count();
  tb.truncation_edges = 4 * cover.crossing_count();
  tb.vertices = 2 * cover.edge_count();
  for (int f = 0; f < fs.size(); ++f) tb.cell_size.push_back(2 * fs.length(f));
  for (int cv = 0; cv < cover.crossing_count(); ++cv) tb.cell_size.push_back(4);
  tb.across.resize(tb.cell_count());
  for (int f = 0; f < fs.size(); ++f) {
    for (int i = 0; i < fs.length(f); ++i) {
      int m = cover.mate(fs.faces[f][i]);
      tb.across[f].push_back({fs.face_of[m], 2 * fs.position_of[m]});
      tb.across[f].push_back({tb.face_count + CoverDiagram::vertex_of(m), rotation_index(m)});
    }
  }
  for (int cv = 0; cv < cover.crossing_count(); ++cv) {
    for (int q = 0; q < 4; ++q) {
      int m = cover.mate(half_edge_at_rotation_index(cv, q));
      tb.across[tb.face_count + cv].push_back({fs.face_of[m], 2 * fs.position_of[m] + 1});
    }
  }
  return tb;
}

int euler_disc_count(int genus, int intersections, bool colourable) {
  if (genus < 0 || intersections < 0) {
    throw Error(ErrorKind::InvalidArgument, "genus and intersection count must be nonnegative");
  }
  if (colourable && intersections % 2 != 0) {
    throw Error(ErrorKind::OddIntersectionWithColouring,
                "a colourable diagram meets a closed surface in an even number of points, got " +
                    std::to_string(intersections));
  }
  return 2 - 2 * genus + intersections;
}

bool check_normal_curve(const TruncatedBoundary& tb, const BoundaryCurve& curve) {
  if (curve.steps.empty()) {
    if (curve.lone_cell < 0 || curve.lone_cell >= tb.cell_count()) {
      throw Error(ErrorKind::MalformedCurve, "empty curve needs a cell");
    }
    return false;  // every cell is a disc
  }
  const int n = static_cast<int>(curve.steps.size());
  for (const auto& s : curve.steps) {
    if (s.cell < 0 || s.cell >= tb.cell_count() || s.exit < 0 || s.exit >= tb.cell_size[s.cell]) {
      throw Error(ErrorKind::MalformedCurve, "curve step outside the truncated boundary");
    }
  }
  bool normal = true;
  for (int i = 0; i < n; ++i) {
    const auto& prev = curve.steps[(i + n - 1) % n];
    const auto& cur = curve.steps[i];
    auto [cell, entry] = tb.across[prev.cell][prev.exit];
    if (cell != cur.cell) {
      throw Error(ErrorKind::MalformedCurve, "step " + std::to_string(i) +
                                                 " is not in the cell across the previous exit");
    }
    if (entry == cur.exit) normal = false;
    const int size = tb.cell_size[cell];
    const bool adjacent = wrap(entry - cur.exit, size) == 1 || wrap(cur.exit - entry, size) == 1;
    if (!tb.is_square(cell) && adjacent) normal = false;
  }
  return normal;
}

BoundaryCurve pushed_off_face(const ChunkDecomposition& chunk, int face) {
  const CoverDiagram& cover = chunk.cover;
  const FaceSet& fs = chunk.faces;
  BoundaryCurve curve;
  for (int d : fs.faces.at(face)) {
    int m = cover.mate(d);
    int neighbour = fs.face_of[m];
    int j = fs.position_of[m];
    curve.steps.push_back({neighbour, wrap(2 * j - 1, 2 * fs.length(neighbour))});
    curve.steps.push_back({fs.size() + CoverDiagram::vertex_of(m), (rotation_index(m) + 1) % 4});
  }
  return curve;
}

}  // namespace nsd
