#include "nsd/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "nsd/analysis.hpp"
#include "nsd/error.hpp"

namespace nsd {

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct Frame {
  int offset = 0;
  int orientation = 1;
};

int rel_slot(const Frame& f, int a) { return ((f.orientation * (a - f.offset)) % 4 + 4) % 4; }
int abs_slot(const Frame& f, int r) { return ((f.offset + f.orientation * r) % 4 + 4) % 4; }

// Labels crossings in breadth-first order from the start flag; returns the
// encoding and fills label/frame.
CanonicalForm encode_from(const SignedScheme& s, int start, int start_orientation, bool with_over,
                          std::vector<int>& label, std::vector<Frame>& frame,
                          const CanonicalForm* best) {
  const int n = s.crossing_count();
  label.assign(n, -1);
  frame.assign(n, Frame{});
  std::vector<int> order;
  order.reserve(n);
  label[crossing_of(start)] = 0;
  frame[crossing_of(start)] = {slot_of(start), start_orientation};
  order.push_back(crossing_of(start));
  CanonicalForm out;
  out.reserve(n * (with_over ? 13 : 12));
  bool tied = best != nullptr;
  auto emit = [&](uint8_t x) -> bool {
    if (tied) {
      uint8_t b = (*best)[out.size()];
      if (x > b) return false;
      if (x < b) tied = false;
    }
    out.push_back(x);
    return true;
  };
  for (size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    const Frame fu = frame[u];
    if (with_over) {
      int bit = (fu.offset % 2) ^ s.over_parity(u) ^ (fu.orientation < 0 ? 1 : 0);
      if (!emit(static_cast<uint8_t>(bit))) return {};
    }
    for (int r = 0; r < 4; ++r) {
      const int h = half_edge(u, abs_slot(fu, r));
      const int g = s.mate(h);
      const int w = crossing_of(g);
      if (label[w] == -1) {
        label[w] = static_cast<int>(order.size());
        frame[w] = {slot_of(g), fu.orientation * s.sign(h)};
        order.push_back(w);
      }
      const int rel_sign = s.sign(h) * fu.orientation * frame[w].orientation;
      if (!emit(static_cast<uint8_t>(label[w]))) return {};
      if (!emit(static_cast<uint8_t>(rel_slot(frame[w], slot_of(g))))) return {};
      if (!emit(static_cast<uint8_t>(rel_sign > 0 ? 0 : 1))) return {};
    }
  }
  return out;
}

struct Labelling {
  CanonicalForm form;
  std::vector<int> label;
  std::vector<Frame> frame;
};

Labelling best_labelling(const SignedScheme& s, bool with_over) {
  Labelling best;
  std::vector<int> label;
  std::vector<Frame> frame;
  for (int h = 0; h < s.half_edge_count(); ++h) {
    for (int eps : {1, -1}) {
      const CanonicalForm* bound = best.form.empty() ? nullptr : &best.form;
      CanonicalForm f = encode_from(s, h, eps, with_over, label, frame, bound);
      if (f.empty()) continue;
      if (best.form.empty() || f < best.form) best = {std::move(f), label, frame};
    }
  }
  return best;
}

SignedScheme scheme_from_form(const CanonicalForm& form, int n, bool with_over) {
  RawScheme raw;
  raw.crossings = n;
  raw.over.assign(n, 0);
  const int stride = with_over ? 13 : 12;
  for (int v = 0; v < n; ++v) {
    const uint8_t* rec = form.data() + v * stride;
    if (with_over) {
      raw.over[v] = rec[0];
      ++rec;
    }
    for (int r = 0; r < 4; ++r) {
      int w = rec[3 * r];
      int b = rec[3 * r + 1];
      int sign = rec[3 * r + 2] ? -1 : 1;
      if (half_edge(v, r) < half_edge(w, b)) raw.edges.push_back({{v, r}, {w, b}, sign});
    }
  }
  return SignedScheme::validate(raw);
}

}  // namespace

CanonicalForm canonical_form(const SignedScheme& scheme, bool with_over) {
  return best_labelling(scheme, with_over).form;
}

SignedScheme canonical_scheme(const SignedScheme& scheme, bool with_over) {
  return scheme_from_form(canonical_form(scheme, with_over), scheme.crossing_count(), with_over);
}

CanonicalForm brute_canonical_form(const SignedScheme& scheme, bool with_over) {
  // Every labelling: a crossing permutation plus, per crossing, a rotation
  // and an optional switch. The encoding is the sorted edge list of the
  // relabelled scheme, which is comparable across labellings.
  const int n = scheme.crossing_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best;
  long long frame_codes = 1;
  for (int i = 0; i < n; ++i) frame_codes *= 8;
  do {
    for (long long code = 0; code < frame_codes; ++code) {
      SignedScheme t = scheme;
      std::vector<int> rot(n);
      long long c = code;
      for (int v = 0; v < n; ++v) {
        int f = static_cast<int>(c % 8);
        c /= 8;
        if (f >= 4) t = switch_crossing(t, v);
        rot[v] = f % 4;
      }
      t = relabel(t, perm, rot);
      CanonicalForm enc;
      for (int h = 0; h < t.half_edge_count(); ++h) {
        int g = t.mate(h);
        enc.push_back(static_cast<uint8_t>(g));
        enc.push_back(static_cast<uint8_t>(t.sign(h) > 0 ? 0 : 1));
      }
      if (with_over) {
        for (int v = 0; v < n; ++v) enc.push_back(static_cast<uint8_t>(t.over_parity(v)));
      }
      if (best.empty() || enc < best) best = std::move(enc);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string to_hex(const CanonicalForm& form) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (uint8_t b : form) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

int default_thread_count() {
  if (const char* env = std::getenv("NSD_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

bool matching_connected(int n, const std::vector<int>& mate) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int classes = n;
  for (int h = 0; h < 4 * n; ++h) {
    int a = find(h / 4), b = find(mate[h] / 4);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  }
  return classes == 1;
}

bool matching_is_knot(const std::vector<int>& mate) {
  int start = 0, h = 0, steps = 0;
  do {
    h = strand_partner(mate[h]);
    steps += 1;
  } while (h != start);
  // each step covers one edge; a knot visits all 2n edges
  return steps == static_cast<int>(mate.size()) / 2;
}

// Matchings are split into jobs by the partner of slot 0 and of the lowest
// remaining slot, so threads share work evenly.
void for_each_matching(std::vector<int>& mate, int next,
                       const std::function<void(const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(mate.size());
  while (next < m && mate[next] != -1) ++next;
  if (next == m) {
    visit(mate);
    return;
  }
  for (int j = next + 1; j < m; ++j) {
    if (mate[j] != -1) continue;
    mate[next] = j;
    mate[j] = next;
    for_each_matching(mate, next + 1, visit);
    mate[next] = mate[j] = -1;
  }
}

}  // namespace

std::vector<CensusEntry> enumerate_shadows(const CensusOptions& options) {
  if (options.max_crossings < 1 || options.max_crossings > 4) {
    throw Error(ErrorKind::BoundTooLarge, "census supports 1 to 4 crossings, got " +
                                              std::to_string(options.max_crossings));
  }
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  std::map<CanonicalForm, CensusEntry> found;
  std::mutex lock;

  for (int n = 1; n <= options.max_crossings; ++n) {
    const int m = 4 * n;
    // Jobs: choices of partners for slots 0 and the next free slot.
    std::vector<std::pair<int, int>> jobs;
    for (int j = 1; j < m; ++j) {
      int second = (j == 1) ? 2 : 1;
      for (int k = second + 1; k < m; ++k) {
        if (k == j) continue;
        jobs.emplace_back(j, k);
      }
    }
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
      std::map<CanonicalForm, CensusEntry> local;
      for (size_t job = cursor++; job < jobs.size(); job = cursor++) {
        auto [j, k] = jobs[job];
        std::vector<int> mate(m, -1);
        int second = (j == 1) ? 2 : 1;
        mate[0] = j;
        mate[j] = 0;
        mate[second] = k;
        mate[k] = second;
        for_each_matching(mate, 0, [&](const std::vector<int>& full) {
          if (!matching_connected(n, full)) return;
          if (options.knots_only && !matching_is_knot(full)) return;
          // Spanning-tree edges can be switched to +1.
          std::vector<int> seen(n, 0);
          std::vector<char> tree_edge(m, 0);
          std::vector<int> stack{0};
          seen[0] = 1;
          while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = 0; a < 4; ++a) {
              int h = 4 * v + a;
              int w = full[h] / 4;
              if (!seen[w]) {
                seen[w] = 1;
                tree_edge[h] = tree_edge[full[h]] = 1;
                stack.push_back(w);
              }
            }
          }
          std::vector<int> free_edges;
          for (int h = 0; h < m; ++h) {
            if (h < full[h] && !tree_edge[h]) free_edges.push_back(h);
          }
          const int combos = 1 << free_edges.size();
          for (int mask = 0; mask < combos; ++mask) {
            RawScheme raw;
            raw.crossings = n;
            raw.over.assign(n, 0);
            for (int h = 0; h < m; ++h) {
              if (h > full[h]) continue;
              int sign = 1;
              auto it = std::find(free_edges.begin(), free_edges.end(), h);
              if (it != free_edges.end() && (mask >> (it - free_edges.begin())) & 1) sign = -1;
              raw.edges.push_back({{h / 4, h % 4}, {full[h] / 4, full[h] % 4}, sign});
            }
            SignedScheme s = SignedScheme::validate(raw);
            if (options.surface == SurfaceFilter::KleinBottle) {
              SurfaceId id = surface_of(s);
              if (id.orientable || id.euler_characteristic != 0) continue;
            }
            if (options.weakly_prime_only && !weakly_prime(s)) continue;
            CanonicalForm form = canonical_form(s);
            if (local.count(form)) continue;
            local.emplace(form, CensusEntry{scheme_from_form(form, n, false), form, n});
          }
        });
      }
      std::lock_guard<std::mutex> guard(lock);
      for (auto& [form, entry] : local) found.emplace(form, std::move(entry));
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CensusEntry> out;
  for (auto& [form, entry] : found) out.push_back(std::move(entry));
  std::stable_sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return a.crossings != b.crossings ? a.crossings < b.crossings : a.form < b.form;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Flag oracles

namespace {

// Flag 2h + k, k = 0 for the side of h facing its rotation successor.
struct FlagModel {
  int n = 0;
  std::vector<int> mate;
  std::vector<int> sign;

  explicit FlagModel(const SignedScheme& s) : n(s.crossing_count()) {
    for (int h = 0; h < 4 * n; ++h) {
      mate.push_back(s.mate(h));
      sign.push_back(s.sign(h));
    }
  }
  int flags() const { return 8 * n; }
  int a0(int f) const {
    int h = f / 2, k = f % 2;
    int k2 = sign[h] > 0 ? 1 - k : k;
    return 2 * mate[h] + k2;
  }
  int a1(int f) const {
    int h = f / 2, k = f % 2;
    int v = h / 4, a = h % 4;
    if (k == 0) return 2 * (4 * v + (a + 1) % 4) + 1;
    return 2 * (4 * v + (a + 3) % 4);
  }
  static int a2(int f) { return f ^ 1; }
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  void unite(int a, int b) { p_[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(p_.size()); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<int> p_;
};

}  // namespace

FaceCensus oracle_faces(const SignedScheme& scheme) {
  FlagModel fm(scheme);
  FaceCensus out;
  out.vertices = fm.n;
  out.edges = 2 * fm.n;
  std::vector<char> seen(fm.flags(), 0);
  for (int f = 0; f < fm.flags(); ++f) {
    if (seen[f]) continue;
    int len = 0, x = f;
    do {
      seen[x] = 1;
      int y = fm.a0(x);
      seen[y] = 1;
      x = fm.a1(y);
      ++len;
    } while (x != f);
    out.face_lengths.push_back(len);
  }
  std::sort(out.face_lengths.begin(), out.face_lengths.end());
  // Orientable iff the flag graph is bipartite.
  std::vector<int> colour(fm.flags(), -1);
  out.orientable = true;
  for (int root = 0; root < fm.flags() && out.orientable; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty() && out.orientable) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {fm.a0(x), fm.a1(x), FlagModel::a2(x)}) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          out.orientable = false;
        }
      }
    }
  }
  return out;
}

namespace {

// Cyclic sequence of a0-pairs ("radii") around each face centre.
struct Radius {
  int flag;  // the lower-numbered flag of the a0-pair
  int face;
  int position;
};

struct RadiusTable {
  std::vector<Radius> radii;        // indexed by radius id
  std::vector<int> radius_of_flag;  // flag -> radius id
  std::vector<int> face_length;
  std::vector<std::vector<int>> face_radii;  // face -> radius ids in order
  std::vector<std::vector<int>> edge_radii;  // edge id -> its two radius ids
};

RadiusTable build_radii(const FlagModel& fm, const SignedScheme& s) {
  RadiusTable t;
  t.radius_of_flag.assign(fm.flags(), -1);
  t.edge_radii.assign(s.edge_count(), {});
  int face = 0;
  for (int f = 0; f < fm.flags(); ++f) {
    if (t.radius_of_flag[f] != -1) continue;
    std::vector<int> ids;
    int x = f, pos = 0;
    do {
      int y = fm.a0(x);
      int id = static_cast<int>(t.radii.size());
      t.radii.push_back({std::min(x, y), face, pos++});
      t.radius_of_flag[x] = t.radius_of_flag[y] = id;
      t.edge_radii[s.edge_of(x / 2)].push_back(id);
      ids.push_back(id);
      x = fm.a1(y);
    } while (x != f);
    t.face_length.push_back(pos);
    t.face_radii.push_back(std::move(ids));
    ++face;
  }
  return t;
}

bool strictly_inside(int x, int from, int to, int len) {
  int dx = ((x - from) % len + len) % len;
  int dt = ((to - from) % len + len) % len;
  return dx > 0 && dx < dt;
}

std::optional<OracleCurve> cut_and_measure(const FlagModel& fm, const RadiusTable& t, int e1, int e2,
                                           int r1, int r2, int r3, int r4) {
  // Chord r1-r2 in face A, chord r3-r4 in face B.
  const int A = t.radii[r1].face;
  const int B = t.radii[r3].face;
  const int F = fm.flags();
  std::vector<char> cut(t.radii.size(), 0);
  cut[r1] = cut[r2] = cut[r3] = cut[r4] = 1;
  auto cut_flag = [&](int f) { return cut[t.radius_of_flag[f]] != 0; };

  DisjointSets comp(F), vert(F), mid(F), centre(F);
  for (int f = 0; f < F; ++f) {
    int g0 = fm.a0(f), g1 = fm.a1(f), g2 = FlagModel::a2(f);
    comp.unite(f, g1);
    comp.unite(f, g2);
    vert.unite(f, g1);
    vert.unite(f, g2);
    mid.unite(f, g2);
    centre.unite(f, g1);
    if (!cut_flag(f)) {
      comp.unite(f, g0);
      mid.unite(f, g0);
      centre.unite(f, g0);
    }
  }
  if (A == B) {
    // Two disjoint chords through one centre meet there; the two sectors
    // bounded by different chords belong to the middle region.
    const int len = t.face_length[A];
    std::vector<std::pair<int, int>> ends = {{t.radii[r1].position, 0}, {t.radii[r2].position, 0},
                                             {t.radii[r3].position, 1}, {t.radii[r4].position, 1}};
    std::sort(ends.begin(), ends.end());
    std::vector<int> middle_flags;
    for (int i = 0; i < 4; ++i) {
      auto [p, c] = ends[i];
      if (c == ends[(i + 1) % 4].second) continue;
      // a flag of the sector just after radius p: a1 of its partner side
      int radius = t.face_radii[A][p];
      int x = t.radii[radius].flag;
      int y = fm.a0(x);
      // the sector after position p is entered via a1 from whichever flag
      // of the pair leads to position p+1
      int candidate = fm.a1(y);
      if (t.radius_of_flag[candidate] != t.face_radii[A][(p + 1) % len]) candidate = fm.a1(x);
      middle_flags.push_back(candidate);
    }
    if (middle_flags.size() == 2) {
      comp.unite(middle_flags[0], middle_flags[1]);
      centre.unite(middle_flags[0], middle_flags[1]);
    }
  }
  const int side0 = comp.find(t.radii[r1].flag);
  const int side1 = comp.find(fm.a0(t.radii[r1].flag));
  OracleCurve c;
  c.edge1 = e1;
  c.edge2 = e2;
  if (side0 == side1) return c;
  c.separating = true;
  const int sides[2] = {side0, side1};
  for (int k = 0; k < 2; ++k) {
    std::set<int> vs, ms, cs;
    int triangles = 0, uncut = 0, boundary = 0;
    for (int f = 0; f < F; ++f) {
      if (comp.find(f) != sides[k]) continue;
      ++triangles;
      vs.insert(vert.find(f));
      ms.insert(mid.find(f));
      cs.insert(centre.find(f));
      (cut_flag(f) ? boundary : uncut) += 1;
    }
    // a1 and a2 pairs give triangles/2 edges each; a0 pairs are shared
    // unless cut, when every flag keeps its own copy.
    const int edges = triangles + uncut / 2 + boundary;
    const int vertices = static_cast<int>(vs.size() + ms.size() + cs.size());
    c.chi_side[k] = vertices - edges + triangles;
    c.crossings_side[k] = static_cast<int>(vs.size());
  }
  for (int k = 0; k < 2; ++k) {
    bool disc = c.chi_side[k] == 1 && c.crossings_side[k] > 0;
    bool other_trivial = c.chi_side[1 - k] == 1 && c.crossings_side[1 - k] == 0;
    if (disc && !other_trivial) c.composite = true;
  }
  return c;
}

}  // namespace

std::vector<OracleCurve> oracle_curves(const SignedScheme& scheme) {
  FlagModel fm(scheme);
  RadiusTable t = build_radii(fm, scheme);
  std::vector<OracleCurve> out;
  const int E = scheme.edge_count();
  for (int e1 = 0; e1 < E; ++e1) {
    for (int e2 = e1 + 1; e2 < E; ++e2) {
      const auto& x = t.edge_radii[e1];
      const auto& y = t.edge_radii[e2];
      for (int swap = 0; swap < 2; ++swap) {
        int r1 = x[0], r4 = x[1];
        int r2 = swap ? y[1] : y[0];
        int r3 = swap ? y[0] : y[1];
        if (t.radii[r1].face != t.radii[r2].face || t.radii[r3].face != t.radii[r4].face) continue;
        if (t.radii[r1].face == t.radii[r3].face) {
          int len = t.face_length[t.radii[r1].face];
          int p1 = t.radii[r1].position, p2 = t.radii[r2].position;
          bool in3 = strictly_inside(t.radii[r3].position, p1, p2, len);
          bool in4 = strictly_inside(t.radii[r4].position, p1, p2, len);
          if (in3 != in4) continue;
        }
        if (auto c = cut_and_measure(fm, t, e1, e2, r1, r2, r3, r4)) out.push_back(*c);
      }
    }
  }
  return out;
}

bool oracle_weakly_prime(const SignedScheme& scheme) {
  for (const OracleCurve& c : oracle_curves(scheme)) {
    if (c.composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random schemes

SignedScheme random_scheme(int crossings, std::mt19937_64& rng) {
  const int m = 4 * crossings;
  while (true) {
    std::vector<int> slots(m);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> mate(m);
    for (int i = 0; i < m; i += 2) {
      mate[slots[i]] = slots[i + 1];
      mate[slots[i + 1]] = slots[i];
    }
    if (!matching_connected(crossings, mate)) continue;
    RawScheme raw;
    raw.crossings = crossings;
    raw.over.resize(crossings);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int v = 0; v < crossings; ++v) raw.over[v] = bit(rng);
    for (int h = 0; h < m; ++h) {
      if (h < mate[h]) {
        raw.edges.push_back({{h / 4, h % 4}, {mate[h] / 4, mate[h] % 4}, bit(rng) ? 1 : -1});
      }
    }
    return SignedScheme::validate(raw);
  }
}

std::optional<std::vector<int>> alternating_over_bits(const SignedScheme& s, int first) {
  const int n = s.crossing_count();
  // o_v xor o_w = 1 xor a%2 xor b%2 xor [sign < 0] along each edge.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < s.edge_count(); ++e) {
    int h = s.edge_half(e), g = s.mate(h);
    int parity = 1 ^ (slot_of(h) % 2) ^ (slot_of(g) % 2) ^ (s.sign(h) < 0 ? 1 : 0);
    adj[crossing_of(h)].push_back({crossing_of(g), parity});
    adj[crossing_of(g)].push_back({crossing_of(h), parity});
  }
  std::vector<int> bit(n, -1);
  bit[0] = first;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, p] : adj[v]) {
      int want = bit[v] ^ p;
      if (bit[w] == -1) {
        bit[w] = want;
        stack.push_back(w);
      } else if (bit[w] != want) {
        return std::nullopt;
      }
    }
  }
  return bit;
}

SignedScheme random_alternating_scheme(int crossings, std::mt19937_64& rng, bool nonorientable) {
  while (true) {
    SignedScheme s = random_scheme(crossings, rng);
    if (nonorientable && is_orientable(s)) continue;
    auto bits = alternating_over_bits(s, std::uniform_int_distribution<int>(0, 1)(rng));
    if (!bits) continue;
    RawScheme raw = s.raw();
    raw.over = *bits;
    return SignedScheme::validate(raw);
  }
}

SignedScheme random_equivalent(const SignedScheme& scheme, std::mt19937_64& rng) {
  const int n = scheme.crossing_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rot(n);
  std::uniform_int_distribution<int> r4(0, 3), coin(0, 1);
  for (int& r : rot) r = r4(rng);
  SignedScheme t = relabel(scheme, perm, rot);
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) t = switch_crossing(t, v);
  }
  return t;
}

}  // namespace nsd
