#include "nsd/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace nsd {

bool strand_alternating(const SignedScheme& scheme) {
  for (const ComponentInfo& c : components(scheme)) {
    const int start = c.departures.front();
    int h = start;
    int orientation = 1;
    do {
      bool leaving_over = strand_is_over(scheme, h, orientation);
      int g = scheme.mate(h);
      orientation *= scheme.sign(h);
      bool arriving_over = strand_is_over(scheme, g, orientation);
      if (leaving_over == arriving_over) return false;
      h = strand_partner(g);
    } while (h != start || orientation != 1);
  }
  return true;
}

namespace {

// For each region walk, whether each boundary edge starts at an over-strand,
// and whether its far end is over as well.
struct EdgeEnds {
  bool start_over;
  bool end_over;
};

std::vector<std::vector<EdgeEnds>> region_edge_ends(const SignedScheme& scheme) {
  std::vector<std::vector<EdgeEnds>> out;
  for (const auto& walk : trace_base_faces(scheme)) {
    std::vector<EdgeEnds> ends;
    for (const BaseDart& d : walk) {
      int g = scheme.mate(d.half_edge);
      int far_orientation = d.orientation * scheme.sign(d.half_edge);
      ends.push_back({strand_is_over(scheme, d.half_edge, d.orientation),
                      strand_is_over(scheme, g, far_orientation)});
    }
    out.push_back(std::move(ends));
  }
  return out;
}

}  // namespace

RegionCheck region_alternating_check(const SignedScheme& scheme) {
  auto regions = region_edge_ends(scheme);
  for (int r = 0; r < static_cast<int>(regions.size()); ++r) {
    const auto& ends = regions[r];
    for (const EdgeEnds& e : ends) {
      if (e.start_over == e.end_over || e.start_over != ends.front().start_over) {
        return {false, r};
      }
    }
  }
  return {true, std::nullopt};
}

bool left_right_rule_holds(const SignedScheme& scheme) {
  for (const auto& ends : region_edge_ends(scheme)) {
    const int len = static_cast<int>(ends.size());
    for (int i = 0; i < len; ++i) {
      for (int j = 0; j < len; ++j) {
        if (i == j) continue;
        // Corners i+1..j lie on the left of a chord entering at i and leaving at j.
        bool entry_over_left = !ends[i].start_over;
        bool exit_over_left = ends[j].start_over;
        if (entry_over_left == exit_over_left) return false;
      }
    }
  }
  return true;
}

bool s_alternating(const CoverDiagram& cover) {
  for (const CoverComponent& c : lifted_components(cover)) {
    for (int h : c.departures) {
      if (cover.is_over(h) == cover.is_over(cover.mate(h))) return false;
    }
  }
  return true;
}

bool s_alternating(const SignedScheme& scheme) {
  return s_alternating(CoverDiagram::lift(scheme));
}

bool reduced_alternating(const SignedScheme& scheme) {
  if (!s_alternating(scheme)) return false;
  for (const ComponentInfo& c : components(scheme)) {
    if (c.crossing_visit_count() < 1) return false;
  }
  return weakly_prime(scheme);
}

// ---------------------------------------------------------------------------

namespace {

struct Constraint {
  int other;
  int parity;  // 0 = same colour, 1 = different colour
  bool from_tau;
};

// Parity two-colouring with BFS parents for an odd-cycle witness.
CheckerboardResult solve_parity(int count, const std::vector<std::vector<Constraint>>& adj) {
  CheckerboardResult result;
  std::vector<int> colour(count, -1);
  std::vector<int> parent(count, -1);
  for (int root = 0; root < count; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (const Constraint& c : adj[f]) {
        int want = colour[f] ^ c.parity;
        if (colour[c.other] == -1) {
          colour[c.other] = want;
          parent[c.other] = f;
          q.push(c.other);
        } else if (colour[c.other] != want) {
          ColouringObstruction ob;
          ob.kind = c.from_tau ? ColouringObstruction::Kind::TauConflict
                               : ColouringObstruction::Kind::OddCycle;
          std::vector<int> path_a{f};
          while (parent[path_a.back()] != -1) path_a.push_back(parent[path_a.back()]);
          std::vector<int> path_b{c.other};
          while (parent[path_b.back()] != -1) path_b.push_back(parent[path_b.back()]);
          std::set<int> on_a(path_a.begin(), path_a.end());
          ob.faces = path_a;
          for (int x : path_b) {
            if (on_a.count(x)) break;
            ob.faces.push_back(x);
          }
          result.obstruction = std::move(ob);
          return result;
        }
      }
    }
  }
  result.colouring = std::move(colour);
  return result;
}

std::vector<std::vector<Constraint>> edge_constraints(const CoverDiagram& cover,
                                                      const FaceSet& fs,
                                                      std::optional<int>* self_adjacent) {
  std::vector<std::vector<Constraint>> adj(fs.size());
  for (int e = 0; e < cover.edge_count(); ++e) {
    int h = cover.edge_half(e);
    int f1 = fs.face_of[h];
    int f2 = fs.face_of[cover.mate(h)];
    if (f1 == f2) {
      if (!*self_adjacent) *self_adjacent = f1;
      continue;
    }
    adj[f1].push_back({f2, 1, false});
    adj[f2].push_back({f1, 1, false});
  }
  return adj;
}

}  // namespace

CheckerboardResult checkerboard_cover(const CoverDiagram& cover, const FaceSet& fs) {
  std::optional<int> self;
  auto adj = edge_constraints(cover, fs, &self);
  if (self) {
    CheckerboardResult r;
    r.obstruction = ColouringObstruction{ColouringObstruction::Kind::SelfAdjacentFace, {*self}};
    return r;
  }
  return solve_parity(fs.size(), adj);
}

CheckerboardResult checkerboard_base_colouring(const CoverDiagram& cover, const FaceSet& fs) {
  std::optional<int> self;
  auto adj = edge_constraints(cover, fs, &self);
  if (self) {
    CheckerboardResult r;
    r.obstruction = ColouringObstruction{ColouringObstruction::Kind::SelfAdjacentFace, {*self}};
    return r;
  }
  for (int f = 0; f < fs.size(); ++f) adj[f].push_back({fs.tau_partner[f], 0, true});
  return solve_parity(fs.size(), adj);
}

bool checkerboard_base(const SignedScheme& scheme) {
  CoverDiagram cover = CoverDiagram::lift(scheme);
  return checkerboard_base_colouring(cover, faces(cover)).colourable();
}

// ---------------------------------------------------------------------------

bool bigon_chain(const SignedScheme& scheme) {
  const int n = scheme.crossing_count();
  auto walks = trace_base_faces(scheme);
  const int region_count = static_cast<int>(walks.size());
  if (region_count - n > 2) return false;
  // bigon multigraph on crossings
  std::vector<std::vector<int>> adj(n);
  std::vector<int> self_bigons(n, 0);
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& w : walks) {
    if (w.size() != 2) continue;
    int u = crossing_of(w[0].half_edge);
    int v = crossing_of(w[1].half_edge);
    if (u == v) {
      ++self_bigons[u];
      continue;
    }
    if (multiplicity[{std::min(u, v), std::max(u, v)}]++ == 0) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  if (n == 1) return self_bigons[0] > 0;
  if (n == 2) return multiplicity[{0, 1}] >= 2;
  // Hamiltonian cycle through simple bigon adjacencies.
  std::vector<char> on_path(n, 0);
  on_path[0] = 1;
  std::function<bool(int, int)> extend = [&](int v, int depth) -> bool {
    if (depth == n) return std::find(adj[v].begin(), adj[v].end(), 0) != adj[v].end();
    for (int w : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      if (extend(w, depth + 1)) return true;
      on_path[w] = 0;
    }
    return false;
  };
  return extend(0, 1);
}

int twist_number_cover(const CoverDiagram& cover, const FaceSet& fs) {
  const int m = cover.crossing_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& f : fs.faces) {
    if (f.size() != 2) continue;
    int u = CoverDiagram::vertex_of(f[0]);
    int v = CoverDiagram::vertex_of(f[1]);
    parent[find(u)] = find(v);
  }
  int classes = 0;
  for (int v = 0; v < m; ++v) classes += find(v) == v ? 1 : 0;
  return classes;
}

// ---------------------------------------------------------------------------

bool wga(const SignedScheme& scheme, Representativity r) {
  if (!r.at_least(4)) return false;
  if (!reduced_alternating(scheme)) return false;
  CoverDiagram cover = CoverDiagram::lift(scheme);
  return checkerboard_cover(cover, faces(cover)).colourable();
}

AnalysisReport analyze(const SignedScheme& scheme, Representativity r) {
  AnalysisReport rep;
  CoverDiagram cover = CoverDiagram::lift(scheme);
  FaceSet fs = faces(cover);
  rep.crossings = scheme.crossing_count();
  rep.orientable_base = is_orientable(scheme);
  rep.surface = SurfaceId{rep.orientable_base, fs.size() / 2 - scheme.crossing_count()};
  rep.cellular_match = !scheme.declared_surface() || *scheme.declared_surface() == rep.surface;
  auto comps = components(scheme);
  rep.component_count = static_cast<int>(comps.size());
  rep.strand_alternating = strand_alternating(scheme);
  rep.region_alternating = region_alternating(scheme);
  rep.s_alternating = s_alternating(cover);
  rep.weakly_prime_base = !find_composite_curve(base_cell_map(scheme)).has_value();
  rep.weakly_prime_cover = !find_composite_curve(cover_cell_map(cover, fs)).has_value();
  bool every_component_crosses = std::all_of(comps.begin(), comps.end(), [](const ComponentInfo& c) {
    return c.crossing_visit_count() >= 1;
  });
  rep.reduced = rep.s_alternating && rep.weakly_prime_base && every_component_crosses;
  CheckerboardResult cover_col = checkerboard_cover(cover, fs);
  rep.checkerboard_cover = cover_col.colourable();
  if (cover_col.colouring) rep.cover_colouring = *cover_col.colouring;
  CheckerboardResult base_col = checkerboard_base_colouring(cover, fs);
  rep.checkerboard_base = base_col.colourable();
  if (base_col.colouring) rep.base_colouring = *base_col.colouring;
  rep.bigon_chain = bigon_chain(scheme);
  rep.twist_number_cover = twist_number_cover(cover, fs);
  rep.representativity = r;
  rep.wga = rep.reduced && rep.checkerboard_cover && r.at_least(4);
  return rep;
}

}  // namespace nsd
