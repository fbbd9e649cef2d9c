// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/chunk.hpp"
#include "nsd/error.hpp"
#include "nsd/nsd_io.hpp"
#include "nsd/prism.hpp"
#include "support.hpp"

using namespace nsd;
using nsd::testing::corpus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// --- 1 -------------------------------------------------------------------
nlohmann::json expectations() {
  std::ifstream in(nsd::testing::corpus_path("expectations.json"));
  return nlohmann::json::parse(in);
}

Outcome classification() {
  Outcome out;
  nlohmann::json expect = expectations();
  auto members = [&](const char* key) { return expect[key].get<std::set<std::string>>(); };
  const auto alt = members("s_alternating");
  const auto base = members("checkerboard_base");
  const auto cover = members("checkerboard_cover");
  for (const std::string& name : expect["knots"].get<std::vector<std::string>>()) {
    AnalysisReport r = analyze(corpus(name));
    if (r.s_alternating != alt.count(name) > 0) out.fail(name + ": s_alternating");
    if (r.checkerboard_base != base.count(name) > 0) out.fail(name + ": checkerboard_base");
    if (r.checkerboard_cover != cover.count(name) > 0) out.fail(name + ": checkerboard_cover");
  }
  if (out.pass) out.detail = "alternating {2_6, 3_16}; base colourable {2_5, 2_6, 3_16}; cover colourable all";
  return out;
}

// --- 2 -------------------------------------------------------------------
Outcome alternating_definitions() {
  Outcome out;
  std::mt19937_64 rng(1001);
  int disagreements = 0;
  int alternating = 0;
  const int total = 1200;
  for (int i = 0; i < total; ++i) {
    SignedScheme s = i % 2 ? random_scheme(1 + i % 6, rng) : random_alternating_scheme(1 + i % 6, rng);
    bool a = strand_alternating(s);
    bool b = region_alternating(s);
    bool c = s_alternating(s);
    if (a != b || b != c) ++disagreements;
    alternating += a;
  }
  if (disagreements) out.fail(std::to_string(disagreements) + " disagreements");
  out.detail = out.pass ? std::to_string(total) + " schemes, " + std::to_string(alternating) + " alternating, 0 disagreements"
                        : out.detail;
  return out;
}

// --- 3 -------------------------------------------------------------------
Outcome weak_prime_transfer() {
  Outcome out;
  std::mt19937_64 rng(1002);
  int composite = 0;
  int disagreements = 0;
  const int total = 600;
  for (int i = 0; i < total; ++i) {
    SignedScheme s = random_alternating_scheme(1 + i % 5, rng);
    bool base = weakly_prime(s);
    bool cover = weakly_prime(CoverDiagram::lift(s));
    bool oracle = oracle_weakly_prime(s);
    if (base != cover || base != oracle) ++disagreements;
    composite += !base;
  }
  if (disagreements) out.fail(std::to_string(disagreements) + " disagreements");
  if (out.pass) {
    out.detail = std::to_string(total) + " schemes, " + std::to_string(composite) + " not weakly prime, 0 disagreements";
  }
  return out;
}

// --- 4 -------------------------------------------------------------------
Outcome chunk_structure() {
  Outcome out;
  std::vector<SignedScheme> sample;
  for (const auto& name : nsd::testing::corpus_names()) sample.push_back(corpus(name));
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 500; ++i) sample.push_back(random_alternating_scheme(1 + i % 6, rng));

  const int per_crossing = expectations()["ideal_edges_per_base_crossing"].get<int>();
  int built = 0;
  int injected = 0;
  int detected = 0;
  for (const SignedScheme& s : sample) {
    if (is_orientable(s) || !s_alternating(s)) continue;
    CoverDiagram lift = CoverDiagram::lift(s);
    if (!checkerboard_cover(lift, faces(lift)).colourable()) continue;
    ChunkDecomposition c = build_chunk(s);
    ++built;
    const int k = s.crossing_count();
    if (c.ideal_edges() != per_crossing * k) out.fail("edge count");
    if (static_cast<int>(c.edge_classes.size()) != k) out.fail("class count");
    for (const auto& cls : c.edge_classes) {
      if (cls.size() != 4) out.fail("class size");
    }
    for (int v = 0; v < c.ideal_vertices(); ++v) {
      if (c.glued_pair[v] < 0) out.fail("no opposite pair glued at an ideal vertex");
    }
    if (!validate_chunk(c).empty()) out.fail("validator: " + validate_chunk(c).front());
    for (int f = 0; f < c.faces.size(); ++f) {
      ++injected;
      detected += !validate_chunk(flip_pairing_direction(c, f)).empty();
    }
  }
  if (detected != injected) out.fail(std::to_string(injected - detected) + " flips undetected");
  if (out.pass) {
    out.detail = std::to_string(built) + " decompositions; " + std::to_string(detected) + "/" +
                 std::to_string(injected) + " flips detected";
  }
  return out;
}

// --- 5 -------------------------------------------------------------------
Outcome euler_count() {
  Outcome out;
  int checked = 0;
  for (int g = 0; g <= 5; ++g) {
    for (int v = 0; v <= 20; ++v) {
      ++checked;
      if (euler_disc_count(g, v) != 2 - 2 * g + v) out.fail("g=" + std::to_string(g) + " v=" + std::to_string(v));
      bool threw = false;
      try {
        int f = euler_disc_count(g, v, true);
        if (f != 2 - 2 * g + v) out.fail("colourable g=" + std::to_string(g));
      } catch (const Error&) {
        threw = true;
      }
      if (threw != (v % 2 == 1)) out.fail("parity rejection at v=" + std::to_string(v));
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " grid points; odd v rejected";
  return out;
}

// --- 6 -------------------------------------------------------------------
Outcome slope_engine() {
  Outcome out;
  SignedScheme s = corpus("2_6");
  PrismMarking m = load_marking(nsd::testing::corpus_path("2_6.marking"));
  SlopeEngine engine(s, m);
  int compared = 0;
  for (long long p = -5; p <= 5; ++p) {
    for (long long q = -5; q <= 5; ++q) {
      if (std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
      ++compared;
      int a = engine.min_intersection({p, q});
      int b = oracle_min_slope_intersection(s, m, {p, q});
      if (a != b) out.fail("slope " + std::to_string(p) + "/" + std::to_string(q));
    }
  }
  ExceptionalSlopes ex = exceptional_slopes(s, m, 10);
  if (!ex.complete) out.fail("exceptional list not certified complete");
  for (const SlopeReport& r : ex.slopes) {
    if (r.intersection > 4) out.fail("listed slope above 4");
    if (oracle_min_slope_intersection(s, m, r.slope) != r.intersection) out.fail("listed value differs from oracle");
  }
  // Unlisted slopes in the comparison box must be non-exceptional for the oracle too.
  for (long long p = -5; p <= 5; ++p) {
    for (long long q = -5; q <= 5; ++q) {
      if (std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
      bool listed = false;
      for (const SlopeReport& r : ex.slopes) listed |= r.slope == Slope{p, q};
      if (!listed && oracle_min_slope_intersection(s, m, {p, q}) <= 4) out.fail("missing exceptional slope");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(compared) + " slopes match; " + std::to_string(ex.slopes.size()) +
                 " exceptional slopes for B=10, certified complete";
  }
  return out;
}

// --- 7 -------------------------------------------------------------------
Outcome census() {
  Outcome out;
  CensusOptions options;
  options.max_crossings = 3;
  options.surface = SurfaceFilter::KleinBottle;
  auto entries = enumerate_shadows(options);
  const size_t expected = expectations()["census_klein_up_to_3"].get<size_t>();
  if (entries.size() != expected) {
    out.fail("count " + std::to_string(entries.size()) + ", expected " + std::to_string(expected));
    for (const CensusEntry& e : entries) std::fprintf(stderr, "witness %s\n%s\n", to_hex(e.form).c_str(), to_nsd(e.shadow).c_str());
  } else {
    out.detail = std::to_string(entries.size()) + " shadows";
  }
  return out;
}

// --- 8 -------------------------------------------------------------------
std::string predicate_signature(const SignedScheme& s) {
  std::ostringstream o;
  SurfaceId id = surface_of(s);
  CoverDiagram c = CoverDiagram::lift(s);
  FaceSet fs = faces(c);
  o << id.orientable << id.euler_characteristic << components(s).size() << strand_alternating(s)
    << region_alternating(s) << s_alternating(s) << checkerboard_base(s) << checkerboard_cover(c, fs).colourable()
    << weakly_prime(s) << weakly_prime(c) << oracle_weakly_prime(s) << twist_number_cover(c, fs) << bigon_chain(s)
    << wga(s, Representativity::infinite()) << wga(s, Representativity::finite(4))
    << klein_bottly(s);
  if (!id.orientable) {
    Verdict v = verdict(s, Ambient::twisted_i_bundle());
    o << static_cast<int>(v.outcome) << v.branch;
  }
  return o.str();
}

Outcome invariance() {
  Outcome out;
  std::mt19937_64 rng(1008);
  int trials = 0;
  for (const auto& name : nsd::testing::corpus_names()) {
    SignedScheme s = corpus(name);
    std::string base = predicate_signature(s);
    for (int i = 0; i < 100; ++i) {
      ++trials;
      if (predicate_signature(random_equivalent(s, rng)) != base) out.fail(name + " under switching/relabelling");
    }
    ++trials;
    if (predicate_signature(mirror(s)) != base) out.fail(name + " under mirror");
  }
  if (out.pass) out.detail = std::to_string(trials) + " transformed diagrams, 0 violations";
  return out;
}

// --- 9 -------------------------------------------------------------------
Outcome volume() {
  Outcome out;
  const double scale = kV8 / 4.0;
  int cases = 0;
  for (int tw : {1, 4, 7, 12, 30}) {
    for (auto [chi_s, chi_b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {-1, -2}, {-3, 0}}) {
      ++cases;
      double expected = scale * std::max(0, tw - 2 * chi_s - 2 * chi_b);
      double got = volume_formula(tw, chi_s, chi_b);
      double tol = 1e-12 * std::max(1.0, std::abs(expected));
      if (std::abs(got - expected) > tol) out.fail("tw=" + std::to_string(tw));
    }
  }
  // Clamping at the boundary: exactly zero, then one step above.
  if (volume_formula(2, 1, 0) != 0.0) out.fail("value at the boundary");
  if (volume_formula(1, 1, 0) != 0.0) out.fail("negative not clamped");
  if (std::abs(volume_formula(3, 1, 0) - scale) > 1e-12 * scale) out.fail("one above the boundary");
  VolumeBound b = volume_lower_bound(corpus("2_6"), 0);
  if (std::abs(b.value - scale * b.twist_number) > 1e-12 * b.value) out.fail("2_6 bound");
  if (out.pass) out.detail = std::to_string(cases) + " combinations within 1e-12; clamping at 0";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"MN classification", classification, 1.0},
      {"alternating-definition equivalence", alternating_definitions, 30.0},
      {"weak-prime transfer", weak_prime_transfer, 0.0},
      {"chunk structure", chunk_structure, 0.0},
      {"Euler count", euler_count, 0.0},
      {"slope engine", slope_engine, 0.0},
      {"census", census, 300.0},
      {"invariance suite", invariance, 0.0},
      {"volume bound", volume, 0.0},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.fail("over time budget");
    }
    failures += !o.pass;
    std::printf("%s %zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, seconds, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
