#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/error.hpp"
#include "support.hpp"

using namespace nsd;
using nsd::testing::corpus;

namespace {

// Every matching and every sign vector, filtered like the census and
// deduplicated with the exhaustive canonical form.
std::set<CanonicalForm> brute_census(int n, const CensusOptions& options) {
  std::set<CanonicalForm> out;
  const int m = 4 * n;
  std::vector<int> mate(m, -1);
  std::function<void()> recurse = [&]() {
    int first = 0;
    while (first < m && mate[first] >= 0) ++first;
    if (first == m) {
      for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
        RawScheme raw;
        raw.crossings = n;
        raw.over.assign(n, 0);
        int bit = 0;
        for (int h = 0; h < m; ++h) {
          if (h > mate[h]) continue;
          int sign = (mask >> bit++) & 1 ? -1 : 1;
          raw.edges.push_back({{h / 4, h % 4}, {mate[h] / 4, mate[h] % 4}, sign});
        }
        std::optional<SignedScheme> parsed;
        try {
          parsed = SignedScheme::validate(raw);
        } catch (const Error&) {
          continue;
        }
        const SignedScheme& s = *parsed;
        if (options.knots_only && components(s).size() != 1) continue;
        if (options.surface == SurfaceFilter::KleinBottle) {
          SurfaceId id = surface_of(s);
          if (id.orientable || id.euler_characteristic != 0) continue;
        }
        if (options.weakly_prime_only && !weakly_prime(s)) continue;
        out.insert(brute_canonical_form(s));
      }
      return;
    }
    for (int other = first + 1; other < m; ++other) {
      if (mate[other] >= 0) continue;
      mate[first] = other;
      mate[other] = first;
      recurse();
      mate[first] = mate[other] = -1;
    }
  };
  recurse();
  return out;
}

std::set<CanonicalForm> brute_forms(const std::vector<CensusEntry>& entries, int n) {
  std::set<CanonicalForm> out;
  for (const CensusEntry& e : entries) {
    if (e.crossings == n) out.insert(brute_canonical_form(e.shadow));
  }
  return out;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("Klein bottle knot shadows up to three crossings") {
    CensusOptions options;
    options.max_crossings = 3;
    auto entries = enumerate_shadows(options);
    CHECK(entries.size() == 17);
    for (const CensusEntry& e : entries) {
      CHECK(surface_of(e.shadow).euler_characteristic == 0);
      CHECK_FALSE(is_orientable(e.shadow));
      CHECK(components(e.shadow).size() == 1);
      CHECK(weakly_prime(e.shadow));
      CHECK(canonical_form(e.shadow) == e.form);
    }
    // Every corpus knot shadow shows up.
    for (const std::string name : {"1_1", "2_5", "2_6", "3_16"}) {
      CanonicalForm f = canonical_form(corpus(name));
      bool present = false;
      for (const CensusEntry& e : entries) present |= e.form == f;
      CHECK_MESSAGE(present, name);
    }
  }

  TEST_CASE("matches brute enumeration for small bounds") {
    for (SurfaceFilter filter : {SurfaceFilter::Any, SurfaceFilter::KleinBottle}) {
      CensusOptions options;
      options.max_crossings = 2;
      options.surface = filter;
      auto entries = enumerate_shadows(options);
      for (int n = 1; n <= 2; ++n) CHECK(brute_forms(entries, n) == brute_census(n, options));
    }
    CensusOptions links;
    links.max_crossings = 2;
    links.surface = SurfaceFilter::Any;
    links.knots_only = false;
    links.weakly_prime_only = false;
    auto all = enumerate_shadows(links);
    for (int n = 1; n <= 2; ++n) CHECK(brute_forms(all, n) == brute_census(n, links));
  }

  TEST_CASE("thread count does not change the output") {
    CensusOptions options;
    options.max_crossings = 3;
    options.surface = SurfaceFilter::Any;
    options.threads = 1;
    auto serial = enumerate_shadows(options);
    options.threads = 6;
    auto parallel = enumerate_shadows(options);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].form == parallel[i].form);
      CHECK(serial[i].shadow == parallel[i].shadow);
    }
  }

  TEST_CASE("counts grow with the bound") {
    size_t previous = 0;
    for (int n = 1; n <= 3; ++n) {
      CensusOptions options;
      options.max_crossings = n;
      options.surface = SurfaceFilter::Any;
      size_t count = enumerate_shadows(options).size();
      CHECK(count >= previous);
      previous = count;
    }
  }

  TEST_CASE("canonical forms") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 300; ++i) {
      SignedScheme s = random_scheme(1 + i % 4, rng);
      CanonicalForm f = canonical_form(s);
      SignedScheme rep = canonical_scheme(s);
      REQUIRE(canonical_form(rep) == f);
      REQUIRE(canonical_form(random_equivalent(s, rng)) == f);
      REQUIRE(canonical_form(s, true) == canonical_form(random_equivalent(s, rng), true));
      if (s.crossing_count() <= 3) {
        SignedScheme t = random_scheme(s.crossing_count(), rng);
        REQUIRE((brute_canonical_form(s) == brute_canonical_form(t)) == (f == canonical_form(t)));
        REQUIRE(brute_canonical_form(s) == brute_canonical_form(random_equivalent(s, rng)));
      }
    }
    CHECK(to_hex(CanonicalForm{0x0f, 0xa0}) == "0fa0");
  }

  TEST_CASE("bound checks") {
    CensusOptions options;
    options.max_crossings = 9;
    try {
      enumerate_shadows(options);
      FAIL("bound accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoundTooLarge);
    }
    options.max_crossings = 0;
    CHECK_THROWS_AS(enumerate_shadows(options), Error);
  }
}
