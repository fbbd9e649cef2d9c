#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/chunk.hpp"
#include "nsd/error.hpp"
#include "support.hpp"

using namespace nsd;
using nsd::testing::corpus;

namespace {

// Edge classes straight from the pairing maps, ignoring the stored ones.
std::map<int, int> class_sizes(const ChunkDecomposition& c) {
  std::vector<int> parent(c.ideal_edges());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const FacePairing& p : c.pairings) {
    for (size_t i = 0; i < p.target.size(); ++i) {
      int a = c.cover.edge_of(c.faces.faces[p.face][i]);
      int b = c.cover.edge_of(c.faces.faces[p.partner][p.target[i]]);
      parent[find(a)] = find(b);
    }
  }
  std::map<int, int> sizes;
  for (int e = 0; e < c.ideal_edges(); ++e) sizes[find(e)]++;
  return sizes;
}

bool glued_in_fours(const ChunkDecomposition& c) {
  auto sizes = class_sizes(c);
  if (static_cast<int>(sizes.size()) != c.base_crossings()) return false;
  for (auto [root, n] : sizes) {
    if (n != 4) return false;
  }
  return true;
}

// A closed curve whose first arc cuts the corner between interior position
// 2i and truncation position 2i+1 of face 0, every other arc being normal.
std::optional<BoundaryCurve> corner_cutting_curve(const TruncatedBoundary& t) {
  const int start_cell = 0;
  const int entry0 = 0;
  const int exit0 = 1;
  using State = std::pair<int, int>;  // (cell, entry)
  std::map<State, std::pair<State, int>> parent;
  State first = t.across[start_cell][exit0];
  std::queue<State> q;
  q.push(first);
  parent[first] = {{-1, -1}, -1};
  auto normal_exit = [&](int cell, int entry, int exit) {
    if (entry == exit) return false;
    if (t.is_square(cell)) return true;
    int n = t.cell_size[cell];
    return (exit + 1) % n != entry && (entry + 1) % n != exit;
  };
  while (!q.empty()) {
    auto [cell, entry] = q.front();
    q.pop();
    for (int exit = 0; exit < t.cell_size[cell]; ++exit) {
      if (!normal_exit(cell, entry, exit)) continue;
      State next = t.across[cell][exit];
      if (next == State{start_cell, entry0}) {
        BoundaryCurve curve;
        std::vector<BoundaryCurve::Step> tail{{cell, exit}};
        for (State s = {cell, entry}; parent[s].second != -1; s = parent[s].first) {
          tail.push_back({parent[s].first.first, parent[s].second});
        }
        curve.steps.push_back({start_cell, exit0});
        curve.steps.insert(curve.steps.end(), tail.rbegin(), tail.rend());
        return curve;
      }
      if (!parent.count(next)) {
        parent[next] = {{cell, entry}, exit};
        q.push(next);
      }
    }
  }
  return std::nullopt;
}

std::vector<SignedScheme> eligible_sample(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SignedScheme> out;
  for (const auto& name : nsd::testing::corpus_names()) {
    SignedScheme s = corpus(name);
    if (s_alternating(s)) out.push_back(s);
  }
  for (int i = 0; i < count; ++i) out.push_back(random_alternating_scheme(1 + i % 6, rng));
  return out;
}

}  // namespace

TEST_SUITE("chunk") {
  TEST_CASE("2_6 decomposition") {
    ChunkDecomposition c = build_chunk(corpus("2_6"));
    CHECK(c.ideal_vertices() == 4);
    CHECK(c.ideal_edges() == 8);
    CHECK(c.edge_classes.size() == 2);
    for (const auto& cls : c.edge_classes) CHECK(cls.size() == 4);
    CHECK(validate_chunk(c).empty());
    TruncatedBoundary t = truncate(c);
    CHECK(t.square_count == 4);
    CHECK(t.truncation_edges == 16);
    CHECK(t.interior_edges == 8);
    CHECK(t.euler_characteristic() == 0);
  }

  TEST_CASE("three-component link decomposition") {
    ChunkDecomposition c = build_chunk(corpus("fig1_link"));
    CHECK(c.ideal_vertices() == 8);
    CHECK(c.ideal_edges() == 16);
    CHECK(c.edge_classes.size() == 4);
    CHECK(validate_chunk(c).empty());
  }

  TEST_CASE("preconditions") {
    try {
      build_chunk(corpus("2_5"));
      FAIL("2_5 is not alternating");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAlternating);
    }
    try {
      build_chunk(nsd::testing::trefoil());
      FAIL("trefoil lives on the sphere");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OrientableBase);
    }
  }

  TEST_CASE("builder output validates and glues in fours") {
    for (const SignedScheme& s : eligible_sample(500, 41)) {
      ChunkDecomposition c = build_chunk(s);
      auto problems = validate_chunk(c);
      REQUIRE(problems.empty());
      REQUIRE(glued_in_fours(c));
      for (int v = 0; v < c.ideal_vertices(); ++v) REQUIRE(c.glued_pair[v] >= 0);
      for (const FacePairing& p : c.pairings) {
        const FacePairing& back = c.pairings[p.partner];
        for (size_t i = 0; i < p.target.size(); ++i) REQUIRE(back.target[p.target[i]] == static_cast<int>(i));
      }
    }
  }

  TEST_CASE("fault injection is always detected") {
    std::mt19937_64 rng(42);
    int injected = 0;
    for (const SignedScheme& s : eligible_sample(200, 43)) {
      ChunkDecomposition c = build_chunk(s);
      for (int f = 0; f < c.faces.size(); ++f) {
        ++injected;
        CHECK_FALSE(validate_chunk(flip_pairing_direction(c, f)).empty());
      }
      ChunkDecomposition bad = c;
      bad.colour[0] ^= 1;
      CHECK_FALSE(validate_chunk(bad).empty());
      bad = c;
      FacePairing& p = bad.pairings[rng() % bad.pairings.size()];
      if (p.target.size() > 1) {
        std::swap(p.target[0], p.target[1]);
        CHECK_FALSE(validate_chunk(bad).empty());
      }
      bad = c;
      bad.class_of_edge[0] = (bad.class_of_edge[0] + 1) % static_cast<int>(bad.edge_classes.size() + 1);
      CHECK_FALSE(validate_chunk(bad).empty());
    }
    CHECK(injected > 500);
  }

  TEST_CASE("reversing every rotation still glues in fours") {
    for (const SignedScheme& s : eligible_sample(200, 44)) {
      ChunkDecomposition c = build_chunk(s);
      for (int f = 0; f < c.faces.size(); ++f) c = flip_pairing_direction(c, f);
      CHECK(glued_in_fours(c));
    }
  }

  TEST_CASE("truncation counts and Euler characteristic") {
    for (const SignedScheme& s : eligible_sample(200, 45)) {
      ChunkDecomposition c = build_chunk(s);
      TruncatedBoundary t = truncate(c);
      const int k = s.crossing_count();
      REQUIRE(t.square_count == 2 * k);
      REQUIRE(t.truncation_edges == 8 * k);
      REQUIRE(t.interior_edges == 4 * k);
      REQUIRE(t.vertices == 8 * k);
      REQUIRE(t.euler_characteristic() == euler_characteristic(c.cover, c.faces));
      for (int cell = 0; cell < t.cell_count(); ++cell) {
        for (int p = 0; p < t.cell_size[cell]; ++p) {
          auto [c2, p2] = t.across[cell][p];
          REQUIRE(t.across[c2][p2] == std::make_pair(cell, p));
          REQUIRE(t.is_truncation(cell, p) == t.is_truncation(c2, p2));
          if (t.is_square(cell)) REQUIRE_FALSE(t.is_square(c2));
        }
        if (!t.is_square(cell)) REQUIRE(t.cell_size[cell] % 2 == 0);
      }
    }
  }

  TEST_CASE("Euler disc count") {
    CHECK(euler_disc_count(1, 4) == 4);
    CHECK(euler_disc_count(0, 0) == 2);
    CHECK(euler_disc_count(2, 6) == 4);
    CHECK_THROWS_AS(euler_disc_count(1, 3, true), Error);
    CHECK(euler_disc_count(1, 3, false) == 3);
    CHECK_THROWS_AS(euler_disc_count(-1, 0), Error);
  }

  TEST_CASE("normal curves") {
    ChunkDecomposition c = build_chunk(corpus("2_6"));
    TruncatedBoundary t = truncate(c);
    for (int f = 0; f < c.faces.size(); ++f) CHECK(check_normal_curve(t, pushed_off_face(c, f)));

    BoundaryCurve bounce;
    auto [c2, p2] = t.across[0][0];
    bounce.steps = {{0, 0}, {c2, p2}};
    CHECK_FALSE(check_normal_curve(t, bounce));

    BoundaryCurve circle;
    circle.lone_cell = 1;
    CHECK_FALSE(check_normal_curve(t, circle));

    auto corner = corner_cutting_curve(t);
    REQUIRE(corner.has_value());
    CHECK_FALSE(check_normal_curve(t, *corner));

    BoundaryCurve broken = pushed_off_face(c, 0);
    broken.steps[1].cell = (broken.steps[1].cell + 1) % t.cell_count();
    CHECK_THROWS_AS(check_normal_curve(t, broken), Error);
  }

  TEST_CASE("pushed-off curves on random decompositions") {
    // A monogon neighbour would force an arc back onto its own truncation edge.
    for (const SignedScheme& s : eligible_sample(200, 46)) {
      if (!weakly_prime(s)) continue;
      ChunkDecomposition c = build_chunk(s);
      TruncatedBoundary t = truncate(c);
      for (int f = 0; f < c.faces.size(); ++f) {
        BoundaryCurve curve = pushed_off_face(c, f);
        REQUIRE(check_normal_curve(t, curve));
        int truncation_crossings = 0;
        for (const auto& step : curve.steps) truncation_crossings += t.is_truncation(step.cell, step.exit);
        REQUIRE(truncation_crossings == static_cast<int>(curve.steps.size()));
      }
    }
  }
}
