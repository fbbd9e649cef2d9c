#include "nsd/nsd_io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "nsd/error.hpp"

namespace nsd {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& file, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, token, "expected an integer");
  }
}

}  // namespace

NsdDocument parse_nsd(std::istream& in, const std::string& file) {
  static const std::regex edge_re(
      R"(^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*([+-]?1)$)");
  static const std::regex over_re(R"(^(\S+)\s+(\S+)$)");
  static const std::regex surface_re(R"(^(orientable|nonorientable)\s+chi\s*=\s*(-?\d+)$)");

  NsdDocument doc;
  bool have_crossings = false;
  int crossings_line = 0;
  std::map<int, int> over;
  std::set<std::pair<int, int>> used_slots;
  std::set<int> tau_used;
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(file, line_no, line, "expected '<key>: <value>'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    std::smatch m;
    if (key == "crossings") {
      if (have_crossings) throw ParseError(file, line_no, key, "duplicate crossings declaration");
      have_crossings = true;
      crossings_line = line_no;
      doc.raw.crossings = parse_int(value, file, line_no);
    } else if (key == "edge") {
      if (!std::regex_match(value, m, edge_re)) {
        throw ParseError(file, line_no, value, "expected '(v,a) (w,b) +1|-1'");
      }
      RawEdge e;
      e.a = {std::stoi(m[1]), std::stoi(m[2])};
      e.b = {std::stoi(m[3]), std::stoi(m[4])};
      e.sign = m[5].str().front() == '-' ? -1 : 1;
      for (const Slot& s : {e.a, e.b}) {
        if (!used_slots.insert({s.crossing, s.index}).second) {
          throw ParseError(file, line_no, value,
                           "slot (" + std::to_string(s.crossing) + "," + std::to_string(s.index) +
                               ") already matched");
        }
      }
      doc.raw.edges.push_back(e);
    } else if (key == "over") {
      if (!std::regex_match(value, m, over_re)) throw ParseError(file, line_no, value, "expected '<v> <0|1>'");
      int v = parse_int(m[1], file, line_no);
      int bit = parse_int(m[2], file, line_no);
      if (bit != 0 && bit != 1) throw ParseError(file, line_no, m[2], "over flag must be 0 or 1");
      if (!over.emplace(v, bit).second) throw ParseError(file, line_no, m[1], "duplicate over declaration");
    } else if (key == "surface") {
      if (doc.raw.surface) throw ParseError(file, line_no, key, "duplicate surface declaration");
      if (!std::regex_match(value, m, surface_re)) {
        throw ParseError(file, line_no, value, "expected 'orientable|nonorientable chi=<int>'");
      }
      doc.raw.surface = SurfaceId{m[1] == "orientable", std::stoi(m[2])};
    } else if (key == "tau") {
      if (!std::regex_match(value, m, over_re)) throw ParseError(file, line_no, value, "expected '<c> <d>'");
      int a = parse_int(m[1], file, line_no);
      int b = parse_int(m[2], file, line_no);
      if (!tau_used.insert(a).second || !tau_used.insert(b).second) {
        throw ParseError(file, line_no, value, "crossing paired twice in tau");
      }
      doc.tau.emplace_back(a, b);
    } else {
      throw ParseError(file, line_no, key, "unknown key");
    }
  }
  if (!have_crossings) throw ParseError(file, line_no, "<eof>", "missing crossings declaration");
  const int n = doc.raw.crossings;
  doc.raw.over.assign(n > 0 ? n : 0, 0);
  for (auto [v, bit] : over) {
    if (v < 0 || v >= n) throw ParseError(file, crossings_line, std::to_string(v), "over declared for unknown crossing");
    doc.raw.over[v] = bit;
  }
  if (n > 0 && static_cast<int>(over.size()) != n) {
    throw ParseError(file, line_no, "<eof>", "expected one over declaration per crossing");
  }
  return doc;
}

NsdDocument parse_nsd_string(const std::string& text, const std::string& file) {
  std::istringstream in(text);
  return parse_nsd(in, file);
}

SignedScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  return SignedScheme::validate(parse_nsd(in, path).raw);
}

std::string to_nsd(const SignedScheme& scheme) {
  std::ostringstream os;
  os << "crossings: " << scheme.crossing_count() << "\n";
  for (int e = 0; e < scheme.edge_count(); ++e) {
    int h = scheme.edge_half(e);
    int g = scheme.mate(h);
    os << "edge: (" << crossing_of(h) << "," << slot_of(h) << ") (" << crossing_of(g) << ","
       << slot_of(g) << ") " << (scheme.sign(h) > 0 ? "+1" : "-1") << "\n";
  }
  for (int v = 0; v < scheme.crossing_count(); ++v) {
    os << "over: " << v << " " << scheme.over_parity(v) << "\n";
  }
  if (const auto& s = scheme.declared_surface()) {
    os << "surface: " << (s->orientable ? "orientable" : "nonorientable")
       << " chi=" << s->euler_characteristic << "\n";
  }
  return os.str();
}

std::string to_nsd(const CoverDiagram& cover) {
  std::ostringstream os;
  os << "# lifted diagram; crossing 2v+s is the lift of base crossing v on sheet s\n";
  SignedScheme plain = cover.as_scheme();
  os << to_nsd(plain);
  for (int v = 0; v < cover.base_crossing_count(); ++v) os << "tau: " << 2 * v << " " << 2 * v + 1 << "\n";
  // Ids used by marking files.
  auto slot = [](int h) {
    int g = CoverDiagram::scheme_half_edge(h);
    return "(" + std::to_string(g / 4) + "," + std::to_string(g % 4) + ")";
  };
  for (int e = 0; e < cover.edge_count(); ++e) {
    int h = cover.edge_half(e);
    os << "# edge " << e << ": " << slot(h) << " " << slot(cover.mate(h)) << "\n";
  }
  FaceSet fs = faces(cover);
  for (int f = 0; f < fs.size(); ++f) {
    os << "# face " << f << ":";
    for (int d : fs.faces[f]) os << " " << cover.edge_of(d);
    os << "\n";
  }
  return os.str();
}

}  // namespace nsd
