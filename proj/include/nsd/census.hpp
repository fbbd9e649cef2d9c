#pragma once

// Shadow enumeration, canonical forms, and brute-force oracles.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nsd/scheme.hpp"

namespace nsd {

/// Encoding of a scheme up to crossing relabelling, slot rotation and
/// switching. Over data is included only when `with_over` is set.
using CanonicalForm = std::vector<uint8_t>;

CanonicalForm canonical_form(const SignedScheme& scheme, bool with_over = false);
/// The representative whose own labelling realises the canonical form.
SignedScheme canonical_scheme(const SignedScheme& scheme, bool with_over = false);
/// Same equivalence decided by trying all n! * 8^n labellings.
CanonicalForm brute_canonical_form(const SignedScheme& scheme, bool with_over = false);
std::string to_hex(const CanonicalForm& form);

enum class SurfaceFilter { Any, KleinBottle };

struct CensusOptions {
  int max_crossings = 3;
  SurfaceFilter surface = SurfaceFilter::KleinBottle;
  bool knots_only = true;
  bool weakly_prime_only = true;
  int threads = 0;  // 0: NSD_THREADS or hardware concurrency
};

struct CensusEntry {
  SignedScheme shadow;  // canonical representative, over bits all 0
  CanonicalForm form;
  int crossings = 0;
};

/// Deterministic: entries sorted by (crossings, form) whatever the thread count.
std::vector<CensusEntry> enumerate_shadows(const CensusOptions& options);

int default_thread_count();

// ---------------------------------------------------------------------------
// Oracles. Coded against the flag (barycentric triangle) model of the
// embedding, sharing nothing with the face tracing used elsewhere.

struct FaceCensus {
  bool orientable = false;
  int vertices = 0;
  int edges = 0;
  std::vector<int> face_lengths;  // sorted
  int euler_characteristic() const {
    return vertices - edges + static_cast<int>(face_lengths.size());
  }
};

FaceCensus oracle_faces(const SignedScheme& scheme);

struct OracleCurve {
  int edge1 = -1;
  int edge2 = -1;
  bool separating = false;
  int chi_side[2] = {0, 0};
  int crossings_side[2] = {0, 0};
  /// Bounds a disc with crossings whose complement is not a crossing-free disc.
  bool composite = false;
};

std::vector<OracleCurve> oracle_curves(const SignedScheme& scheme);
bool oracle_weakly_prime(const SignedScheme& scheme);

// ---------------------------------------------------------------------------
// Random schemes for property tests.

/// Uniform matching and signs, resampled until connected.
SignedScheme random_scheme(int crossings, std::mt19937_64& rng);
/// Random scheme whose over bits make it alternating; resamples until the
/// parity system is solvable. Optionally requires a nonorientable surface.
SignedScheme random_alternating_scheme(int crossings, std::mt19937_64& rng,
                                       bool nonorientable = true);
/// Over bits making the shadow alternating, if any; bit of crossing 0 fixed to `first`.
std::optional<std::vector<int>> alternating_over_bits(const SignedScheme& shadow, int first = 0);
/// Random relabelling followed by random switchings.
SignedScheme random_equivalent(const SignedScheme& scheme, std::mt19937_64& rng);

}  // namespace nsd
