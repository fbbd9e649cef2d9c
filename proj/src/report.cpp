#include "nsd/report.hpp"

#include <sstream>

namespace nsd {

using nlohmann::ordered_json;

namespace {

ordered_json surface_json(const SurfaceId& s) {
  return {{"name", s.name()}, {"orientable", s.orientable}, {"euler_characteristic", s.euler_characteristic}};
}

ordered_json representativity_json(const Representativity& r) {
  if (r.is_infinite()) return "inf";
  return *r.value;
}

std::string half_edge_label(int h) {
  return "(" + std::to_string(crossing_of(h)) + "," + std::to_string(slot_of(h)) + ")";
}

}  // namespace

ordered_json report_json(const AnalysisReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["surface"] = surface_json(r.surface);
  j["orientable_base"] = r.orientable_base;
  j["crossings"] = r.crossings;
  j["components"] = r.component_count;
  j["strand_alternating"] = r.strand_alternating;
  j["region_alternating"] = r.region_alternating;
  j["s_alternating"] = r.s_alternating;
  j["reduced"] = r.reduced;
  j["weakly_prime_base"] = r.weakly_prime_base;
  j["weakly_prime_cover"] = r.weakly_prime_cover;
  j["checkerboard_cover"] = r.checkerboard_cover;
  j["cover_colouring"] = r.cover_colouring;
  j["checkerboard_base"] = r.checkerboard_base;
  j["base_colouring"] = r.base_colouring;
  j["cellular"] = r.cellular_match;
  j["bigon_chain"] = r.bigon_chain;
  j["twist_number_cover"] = r.twist_number_cover;
  j["representativity"] = representativity_json(r.representativity);
  j["wga"] = r.wga;
  return j;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "surface             " << r.surface.name() << " (chi=" << r.surface.euler_characteristic << ")\n";
  os << "crossings           " << r.crossings << "\n";
  os << "components          " << r.component_count << "\n";
  os << "strand alternating  " << yn(r.strand_alternating) << "\n";
  os << "region alternating  " << yn(r.region_alternating) << "\n";
  os << "S-alternating       " << yn(r.s_alternating) << "\n";
  os << "reduced             " << yn(r.reduced) << "\n";
  os << "weakly prime        " << yn(r.weakly_prime_base) << " (cover " << yn(r.weakly_prime_cover) << ")\n";
  os << "checkerboard base   " << yn(r.checkerboard_base) << "\n";
  os << "checkerboard cover  " << yn(r.checkerboard_cover) << "\n";
  os << "cellular            " << yn(r.cellular_match) << "\n";
  os << "string of bigons    " << yn(r.bigon_chain) << "\n";
  os << "cover twist number  " << r.twist_number_cover << "\n";
  os << "representativity    " << r.representativity.to_string() << "\n";
  os << "WGA                 " << yn(r.wga) << "\n";
  return os.str();
}

ordered_json scheme_json(const SignedScheme& s) {
  ordered_json j;
  j["crossings"] = s.crossing_count();
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < s.edge_count(); ++e) {
    int h = s.edge_half(e);
    edges.push_back({{"from", half_edge_label(h)}, {"to", half_edge_label(s.mate(h))}, {"sign", s.sign(h)}});
  }
  j["edges"] = edges;
  std::vector<int> over;
  for (int v = 0; v < s.crossing_count(); ++v) over.push_back(s.over_parity(v));
  j["over"] = over;
  return j;
}

ordered_json chunk_json(const ChunkDecomposition& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "chunk";
  j["base_crossings"] = c.base_crossings();
  j["ideal_vertices"] = c.ideal_vertices();
  j["ideal_edges"] = c.ideal_edges();
  ordered_json faces = ordered_json::array();
  for (int f = 0; f < c.faces.size(); ++f) {
    std::vector<int> edges;
    for (int d : c.faces.faces[f]) edges.push_back(c.cover.edge_of(d));
    faces.push_back({{"id", f},
                     {"colour", c.colour[f]},
                     {"darts", c.faces.faces[f]},
                     {"edges", edges},
                     {"tau_partner", c.faces.tau_partner[f]}});
  }
  j["faces"] = faces;
  ordered_json pairings = ordered_json::array();
  for (const FacePairing& p : c.pairings) {
    pairings.push_back({{"face", p.face}, {"partner", p.partner}, {"shift", p.shift}, {"target", p.target}});
  }
  j["pairings"] = pairings;
  j["edge_classes"] = c.edge_classes;
  j["glued_pair"] = c.glued_pair;
  TruncatedBoundary t = truncate(c);
  j["truncation"] = {{"cells", t.cell_count()},
                     {"faces", t.face_count},
                     {"squares", t.square_count},
                     {"vertices", t.vertices},
                     {"interior_edges", t.interior_edges},
                     {"truncation_edges", t.truncation_edges},
                     {"euler_characteristic", t.euler_characteristic()}};
  return j;
}

std::string chunk_dot(const ChunkDecomposition& c) {
  std::ostringstream os;
  os << "digraph face_pairing {\n";
  os << "  node [shape=circle];\n";
  for (int f = 0; f < c.faces.size(); ++f) {
    os << "  f" << f << " [label=\"F" << f << " (" << c.faces.length(f) << ")\", style=filled, fillcolor=\""
       << (c.colour[f] == 0 ? "white" : "gray70") << "\"];\n";
  }
  for (const FacePairing& p : c.pairings) {
    os << "  f" << p.face << " -> f" << p.partner << " [label=\"" << (p.shift > 0 ? "+1" : "-1") << "\"];\n";
  }
  os << "}\n";
  os << "graph edge_classes {\n";
  os << "  node [shape=box];\n";
  for (size_t k = 0; k < c.edge_classes.size(); ++k) os << "  c" << k << " [label=\"arc " << k << "\"];\n";
  for (int e = 0; e < c.ideal_edges(); ++e) {
    os << "  e" << e << " [shape=plaintext, label=\"e" << e << "\"];\n";
    os << "  e" << e << " -- c" << c.class_of_edge[e] << ";\n";
  }
  os << "}\n";
  return os.str();
}

ordered_json verdict_json(const Verdict& v, const Ambient& ambient) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verdict";
  j["ambient"] = ambient.name();
  j["outcome"] = to_string(v.outcome);
  j["branch"] = std::string(1, v.branch);
  j["representativity"] = representativity_json(v.representativity);
  ordered_json hyps = ordered_json::array();
  for (const Hypothesis& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = hyps;
  j["assumptions_used"] = v.assumptions_used;
  return j;
}

std::string verdict_text(const Verdict& v, const Ambient& ambient) {
  std::ostringstream os;
  os << "ambient           " << ambient.name() << "\n";
  os << "outcome           " << to_string(v.outcome) << " (branch " << v.branch << ")\n";
  os << "representativity  " << v.representativity.to_string() << "\n";
  for (const Hypothesis& h : v.hypotheses) os << "  [" << (h.holds ? "x" : " ") << "] " << h.name << "\n";
  for (const std::string& a : v.assumptions_used) os << "  assumed: " << a << "\n";
  return os.str();
}

ordered_json slopes_json(const ExceptionalSlopes& s) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "exceptional_slopes";
  j["bound"] = s.bound;
  j["scope"] = s.complete ? "complete" : "within box " + std::to_string(s.bound);
  ordered_json list = ordered_json::array();
  for (const SlopeReport& r : s.slopes) list.push_back({{"p", r.slope.p}, {"q", r.slope.q}, {"r", r.intersection}});
  j["slopes"] = list;
  j["skipped_by_lower_bound"] = s.skipped_by_lower_bound;
  return j;
}

ordered_json volume_json(const VolumeBound& b) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "volume_bound";
  j["value"] = b.value;
  j["twist_number"] = b.twist_number;
  j["chi_surface"] = b.chi_surface;
  j["chi_boundary"] = b.chi_boundary;
  j["status"] = b.hypotheses_met ? "lower bound" : "formal value, hypotheses unmet";
  return j;
}

ordered_json census_json(const std::vector<CensusEntry>& entries, const CensusOptions& options) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "census";
  j["max_crossings"] = options.max_crossings;
  j["surface"] = options.surface == SurfaceFilter::KleinBottle ? "klein" : "any";
  j["count"] = entries.size();
  ordered_json list = ordered_json::array();
  for (const CensusEntry& e : entries) list.push_back({{"crossings", e.crossings}, {"form", to_hex(e.form)}});
  j["shadows"] = list;
  return j;
}

}  // namespace nsd
