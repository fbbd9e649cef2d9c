#pragma once

#include <random>
#include <string>
#include <vector>

#include "nsd/census.hpp"
#include "nsd/nsd_io.hpp"
#include "nsd/scheme.hpp"

#ifndef NSD_DATA_DIR
#define NSD_DATA_DIR "data"
#endif

namespace nsd::testing {

inline std::string corpus_path(const std::string& name) { return std::string(NSD_DATA_DIR) + "/mn/" + name; }

inline SignedScheme corpus(const std::string& name) { return load_scheme(corpus_path(name + ".nsd")); }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"1_1", "2_5", "2_6", "3_16", "fig1_link"};
  return names;
}

inline SignedScheme scheme_from_text(const std::string& text) {
  return SignedScheme::validate(parse_nsd_string(text).raw);
}

/// Planar alternating trefoil.
inline SignedScheme trefoil() {
  return scheme_from_text(
      "crossings: 3\n"
      "edge: (0,0) (1,0) +1\nedge: (0,1) (1,3) +1\nedge: (0,2) (2,0) +1\n"
      "edge: (0,3) (2,3) +1\nedge: (1,1) (2,2) +1\nedge: (1,2) (2,1) +1\n"
      "over: 0 0\nover: 1 1\nover: 2 1\n");
}

/// Cuts edge `edge_a` of `a` and edge `edge_b` of `b` and reconnects the four
/// ends. With `b` planar and all-positive the result lives on a's surface,
/// `b` sitting in a disc.
inline SignedScheme connect_sum(const SignedScheme& a, int edge_a, const SignedScheme& b, int edge_b) {
  RawScheme ra = a.raw();
  RawScheme rb = b.raw();
  const int n = ra.crossings;
  RawScheme out;
  out.crossings = n + rb.crossings;
  out.over = ra.over;
  out.over.insert(out.over.end(), rb.over.begin(), rb.over.end());
  RawEdge cut_a = ra.edges[edge_a];
  RawEdge cut_b = rb.edges[edge_b];
  cut_b.a.crossing += n;
  cut_b.b.crossing += n;
  for (int i = 0; i < static_cast<int>(ra.edges.size()); ++i) {
    if (i != edge_a) out.edges.push_back(ra.edges[i]);
  }
  for (int i = 0; i < static_cast<int>(rb.edges.size()); ++i) {
    if (i == edge_b) continue;
    RawEdge e = rb.edges[i];
    e.a.crossing += n;
    e.b.crossing += n;
    out.edges.push_back(e);
  }
  out.edges.push_back({cut_a.a, cut_b.a, cut_a.sign});
  out.edges.push_back({cut_b.b, cut_a.b, 1});
  return SignedScheme::validate(out);
}

/// Alternating cycle of n bigons through the crosscap of a projective plane.
inline SignedScheme p2_chain(int n) {
  RawScheme raw;
  raw.crossings = n;
  raw.over.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    int w = (v + 1) % n;
    if (v + 1 < n) {
      raw.edges.push_back({{v, 0}, {w, 1}, 1});
      raw.edges.push_back({{v, 3}, {w, 2}, 1});
    } else {
      raw.edges.push_back({{v, 0}, {w, 2}, -1});
      raw.edges.push_back({{v, 3}, {w, 1}, -1});
    }
  }
  SignedScheme shadow = SignedScheme::validate(raw);
  RawScheme alt = shadow.raw();
  alt.over = *alternating_over_bits(shadow);
  return SignedScheme::validate(alt);
}

}  // namespace nsd::testing
