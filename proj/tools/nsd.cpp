// nsd: diagrams on nonorientable surfaces, from the command line.
//
// Exit status: 0 success, 1 negative answer under --strict, 2 input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "nsd/analysis.hpp"
#include "nsd/census.hpp"
#include "nsd/chunk.hpp"
#include "nsd/error.hpp"
#include "nsd/nsd_io.hpp"
#include "nsd/prism.hpp"
#include "nsd/report.hpp"

namespace {

using namespace nsd;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string chunk_format = "json";
  std::string ambient = "ibundle";
  std::string marking;
  std::string slope;
  std::string representativity;
  std::string out_dir;
  std::string surface = "klein";
  int bound = 10;
  int chi_boundary = 0;
  int max_crossings = 3;
  bool strict = false;
  bool assert_prime = false;
  bool assert_atoroidal = false;
  bool all_components = false;
  bool keep_composite = false;
};

Slope parse_slope(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw Error(ErrorKind::InvalidArgument, "expected a slope 'p,q', got '" + text + "'");
  }
  return {std::stoll(m[1]), std::stoll(m[2])};
}

Ambient parse_ambient(const RunConfig& cfg) {
  Ambient a;
  if (cfg.ambient == "ibundle") return Ambient::twisted_i_bundle();
  if (cfg.ambient == "generic") {
    a.kind = Ambient::Kind::Generic;
    if (cfg.representativity == "inf") {
      a.representativity = Representativity::infinite();
    } else if (!cfg.representativity.empty()) {
      int r = std::stoi(cfg.representativity);
      if (r < 0) throw Error(ErrorKind::InvalidArgument, "representativity must be nonnegative");
      a.representativity = Representativity::finite(r);
    }
    return a;
  }
  if (cfg.ambient.rfind("prism:", 0) == 0) {
    if (cfg.marking.empty()) throw Error(ErrorKind::MissingMarking, "a prism ambient needs --marking");
    return Ambient::prism(parse_slope(cfg.ambient.substr(6)), load_marking(cfg.marking));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ambient '" + cfg.ambient + "'");
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const RunConfig& cfg) {
  for (const std::string& path : cfg.inputs) {
    SignedScheme s = load_scheme(path);
    std::cout << path << ": ok, " << s.crossing_count() << " crossings, " << surface_of(s).name() << "\n";
  }
  return kOk;
}

int cmd_info(const RunConfig& cfg) {
  SignedScheme s = load_scheme(cfg.inputs.front());
  SurfaceId surface = surface_of(s);
  CoverDiagram cover = CoverDiagram::lift(s);
  FaceSet fs = faces(cover);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "info";
    j["scheme"] = scheme_json(s);
    j["surface"] = surface.name();
    j["euler_characteristic"] = surface.euler_characteristic;
    j["components"] = components(s).size();
    j["cover_faces"] = fs.size();
    j["cover_euler_characteristic"] = euler_characteristic(cover, fs);
    emit(j);
  } else {
    std::cout << "crossings    " << s.crossing_count() << "\n";
    std::cout << "edges        " << s.edge_count() << "\n";
    std::cout << "surface      " << surface.name() << " (chi=" << surface.euler_characteristic << ")\n";
    std::cout << "components   " << components(s).size() << "\n";
    std::cout << "cover faces  " << fs.size() << " (chi=" << euler_characteristic(cover, fs) << ")\n";
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg) {
  AnalysisReport r = analyze(load_scheme(cfg.inputs.front()));
  if (cfg.format == "json") {
    emit(report_json(r));
  } else {
    std::cout << report_text(r);
  }
  return cfg.strict && !r.wga ? kNegative : kOk;
}

int cmd_cover(const RunConfig& cfg) {
  std::cout << to_nsd(CoverDiagram::lift(load_scheme(cfg.inputs.front())));
  return kOk;
}

int cmd_chunk(const RunConfig& cfg) {
  ChunkDecomposition c = build_chunk(load_scheme(cfg.inputs.front()));
  if (cfg.chunk_format == "dot") {
    std::cout << chunk_dot(c);
  } else {
    emit(chunk_json(c));
  }
  return kOk;
}

int cmd_verdict(const RunConfig& cfg) {
  SignedScheme s = load_scheme(cfg.inputs.front());
  Ambient ambient = parse_ambient(cfg);
  Assumptions assumptions{cfg.assert_prime, cfg.assert_atoroidal};
  Verdict v = verdict(s, ambient, assumptions);
  if (cfg.format == "json") {
    emit(verdict_json(v, ambient));
  } else {
    std::cout << verdict_text(v, ambient);
  }
  return cfg.strict && v.outcome != Verdict::Outcome::Hyperbolic ? kNegative : kOk;
}

int cmd_representativity(const RunConfig& cfg) {
  SignedScheme s = load_scheme(cfg.inputs.front());
  Ambient ambient = Ambient::twisted_i_bundle();
  if (!cfg.slope.empty()) {
    if (cfg.marking.empty()) throw Error(ErrorKind::MissingMarking, "--slope needs --marking");
    ambient = Ambient::prism(parse_slope(cfg.slope), load_marking(cfg.marking));
  }
  Representativity r = representativity(s, ambient);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "representativity";
    j["ambient"] = ambient.name();
    if (r.is_infinite()) {
      j["value"] = "inf";
    } else {
      j["value"] = *r.value;
    }
    emit(j);
  } else {
    std::cout << r.to_string() << "\n";
  }
  return cfg.strict && !r.greater_than(4) ? kNegative : kOk;
}

int cmd_exceptional(const RunConfig& cfg) {
  if (cfg.marking.empty()) throw Error(ErrorKind::MissingMarking, "exceptional-slopes needs --marking");
  SignedScheme s = load_scheme(cfg.inputs.front());
  ExceptionalSlopes ex = exceptional_slopes(s, load_marking(cfg.marking), cfg.bound);
  if (cfg.format == "json") {
    emit(slopes_json(ex));
  } else {
    std::cout << (ex.complete ? "complete list" : "within box " + std::to_string(ex.bound)) << ", "
              << ex.slopes.size() << " slopes with r <= 4\n";
    for (const SlopeReport& r : ex.slopes) {
      std::cout << "  " << r.slope.p << "," << r.slope.q << "  r=" << r.intersection << "\n";
    }
  }
  return kOk;
}

int cmd_volume(const RunConfig& cfg) {
  SignedScheme s = load_scheme(cfg.inputs.front());
  Ambient ambient = parse_ambient(cfg);
  Assumptions assumptions{cfg.assert_prime, cfg.assert_atoroidal};
  VolumeBound b = volume_lower_bound(s, cfg.chi_boundary, ambient, assumptions);
  if (cfg.format == "json") {
    emit(volume_json(b));
  } else {
    std::cout.precision(12);
    std::cout << b.value << (b.hypotheses_met ? "" : "  (formal value, hypotheses unmet)") << "\n";
  }
  return cfg.strict && !b.hypotheses_met ? kNegative : kOk;
}

int cmd_census(const RunConfig& cfg) {
  CensusOptions options;
  options.max_crossings = cfg.max_crossings;
  if (cfg.surface == "klein") {
    options.surface = SurfaceFilter::KleinBottle;
  } else if (cfg.surface == "any") {
    options.surface = SurfaceFilter::Any;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown surface filter '" + cfg.surface + "'");
  }
  options.knots_only = !cfg.all_components;
  options.weakly_prime_only = !cfg.keep_composite;
  std::vector<CensusEntry> entries = enumerate_shadows(options);
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    for (size_t i = 0; i < entries.size(); ++i) {
      std::string name = "shadow_" + std::to_string(entries[i].crossings) + "_" + std::to_string(i) + ".nsd";
      std::ofstream out(std::filesystem::path(cfg.out_dir) / name);
      out << "# form " << to_hex(entries[i].form) << "\n" << to_nsd(entries[i].shadow);
    }
  }
  if (cfg.format == "json") {
    emit(census_json(entries, options));
  } else {
    for (const CensusEntry& e : entries) std::cout << e.crossings << " " << to_hex(e.form) << "\n";
    std::cout << "count " << entries.size() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link diagrams on nonorientable surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* sub, bool many = false) {
    auto* opt = sub->add_option("input", cfg.inputs, many ? "diagram files" : "diagram file")->required();
    if (!many) opt->expected(1);
  };
  auto add_format = [&](CLI::App* sub, std::string& target, std::vector<std::string> allowed) {
    sub->add_option("--format", target, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_ambient = [&](CLI::App* sub) {
    sub->add_option("--ambient", cfg.ambient, "ibundle | prism:p,q | generic");
    sub->add_option("--marking", cfg.marking, "marking file for prism ambients");
    sub->add_flag("--assert-geometrically-prime", cfg.assert_prime, "assume no essential meridianal annulus");
    sub->add_flag("--assert-atoroidal", cfg.assert_atoroidal,
                  "assume M cut along S is atoroidal and anannular (generic ambient)");
    sub->add_option("--representativity", cfg.representativity, "known representativity (generic ambient)");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate diagram files");
  add_input(validate, true);
  auto* info = app.add_subcommand("info", "surface and size summary");
  add_input(info);
  auto* check = app.add_subcommand("check", "alternating, primeness and colouring report");
  add_input(check);
  auto* cover = app.add_subcommand("cover", "emit the lifted diagram on the double cover");
  add_input(cover);
  auto* chunk = app.add_subcommand("chunk", "chunk decomposition");
  add_input(chunk);
  auto* verdict_cmd = app.add_subcommand("verdict", "hyperbolicity verdict");
  add_input(verdict_cmd);
  add_ambient(verdict_cmd);
  auto* rep = app.add_subcommand("representativity", "representativity in a prism manifold or I-bundle");
  add_input(rep);
  rep->add_option("--slope", cfg.slope, "filling slope p,q");
  rep->add_option("--marking", cfg.marking, "marking file");
  auto* slopes = app.add_subcommand("exceptional-slopes", "slopes with representativity at most four");
  add_input(slopes);
  slopes->add_option("--bound", cfg.bound, "search box max(|p|,|q|) <= B")->check(CLI::PositiveNumber);
  slopes->add_option("--marking", cfg.marking, "marking file")->required();
  auto* volume = app.add_subcommand("volume-bound", "lower bound on the complement's volume");
  add_input(volume);
  volume->add_option("--chi-boundary", cfg.chi_boundary, "Euler characteristic of the ambient boundary");
  add_ambient(volume);
  auto* census = app.add_subcommand("census", "enumerate shadows up to equivalence");
  census->add_option("--max-crossings", cfg.max_crossings, "1..4");
  census->add_option("--surface", cfg.surface, "klein | any");
  census->add_option("--out", cfg.out_dir, "write one .nsd per shadow here");
  census->add_flag("--all-components", cfg.all_components, "keep links, not only knots");
  census->add_flag("--keep-composite", cfg.keep_composite, "skip the weak primeness filter");

  for (CLI::App* sub : {check, info, verdict_cmd, rep, slopes, volume, census}) add_format(sub, cfg.format, {"text", "json"});
  add_format(chunk, cfg.chunk_format, {"json", "dot"});
  for (CLI::App* sub : app.get_subcommands({})) sub->add_flag("--strict", cfg.strict, "exit 1 on a negative answer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*info) return cmd_info(cfg);
    if (*check) return cmd_check(cfg);
    if (*cover) return cmd_cover(cfg);
    if (*chunk) return cmd_chunk(cfg);
    if (*verdict_cmd) return cmd_verdict(cfg);
    if (*rep) return cmd_representativity(cfg);
    if (*slopes) return cmd_exceptional(cfg);
    if (*volume) return cmd_volume(cfg);
    if (*census) return cmd_census(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
