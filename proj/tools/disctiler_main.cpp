// disctiler: build, verify, analyze and render monohedral tilings of the
// closed unit disc.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "disctiler/catalog.hpp"
#include "disctiler/io.hpp"
#include "disctiler/multicurve.hpp"
#include "disctiler/tiling.hpp"

namespace {

using namespace disctiler;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

Tolerance scalar_tolerance(double e) {
  Tolerance t;
  t.len = e;
  t.ang = e;
  t.area = std::max(1e-7, e);
  t.congruence = std::max(1e-6, e);
  t.match = std::max(1e-7, e);
  return t;
}

// Precedence: CLI flag > DISC_TILER_EPS > document field > defaults.
Tolerance resolve_tolerance(std::optional<double> cli_eps,
                            const Document& doc) {
  if (cli_eps) return scalar_tolerance(*cli_eps);
  if (const char* env = std::getenv("DISC_TILER_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !std::isfinite(v) || v <= 0.0)
      throw Error("DISC_TILER_EPS: not a positive number");
    return scalar_tolerance(v);
  }
  if (doc.eps_present) return doc.eps;
  return Tolerance{};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void print_report(const ValidationReport& rep, size_t tiles) {
  std::cout << "tiles: " << tiles << "\n";
  std::cout << "jordan: " << (rep.jordan_ok ? "ok" : "FAIL") << "\n";
  std::cout << "coverage: " << (rep.coverage_ok ? "ok" : "FAIL")
            << " (area defect " << fmt(rep.area_defect) << ", rim defect "
            << fmt(rep.rim_defect) << ")\n";
  std::cout << "disjoint: " << (rep.disjoint_ok ? "ok" : "FAIL") << "\n";
  std::cout << "monohedral: " << (rep.monohedral_ok ? "ok" : "FAIL") << "\n";
  for (const std::string& f : rep.failures) std::cout << "  - " << f << "\n";
  std::cout << "result: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const std::string& file, std::optional<double> eps) {
  const Document doc = parse_document(read_file(file));
  if (doc.kind != Document::Kind::Tiling)
    throw Error(file + ": expected a tiling document");
  Tiling t{doc.boundaries, resolve_tolerance(eps, doc)};
  const ValidationReport rep = validate(t);
  print_report(rep, t.tiles.size());
  return rep.pass() ? 0 : 1;
}

int cmd_analyze(const std::string& file) {
  const Document doc = parse_document(read_file(file));
  if (doc.kind != Document::Kind::Tiling)
    throw Error(file + ": expected a tiling document");
  Tiling t{doc.boundaries, resolve_tolerance(std::nullopt, doc)};
  const ValidationReport rep = validate(t);
  print_report(rep, t.tiles.size());
  if (!rep.pass()) return 1;

  const SymmetryInfo sym = symmetry_order(t);
  std::cout << "symmetry order: " << sym.order << "\n";
  std::cout << "rotationally generated: "
            << (sym.rotationally_generated ? "yes" : "no") << "\n";

  const CenterCensus census = center_containment(t);
  std::cout << "contains O: " << census.contains() << " of "
            << t.tiles.size() << " (" << census.interior_count
            << " interior)\n";

  const BoundaryArcReport rims = boundary_arcs(t);
  std::cout << "boundary arcs (total " << fmt(rims.total_length) << ", "
            << (rims.all_connected ? "all connected" : "DISCONNECTED rim set")
            << "):\n";
  for (size_t i = 0; i < rims.per_tile.size(); ++i) {
    std::cout << "  tile " << i << ":";
    for (const RimArc& a : rims.per_tile[i].arcs) {
      if (a.length == 0.0)
        std::cout << " point contact at angle " << fmt(a.start_angle) << ";";
      else
        std::cout << " arc start " << fmt(a.start_angle) << " length "
                  << fmt(a.length) << ";";
    }
    if (rims.per_tile[i].arcs.empty()) std::cout << " none";
    std::cout << "\n";
  }

  const std::vector<TriplePoint> triples = triple_points(t);
  int interior = 0;
  for (const TriplePoint& tp : triples) interior += tp.interior ? 1 : 0;
  std::cout << "triple points: " << triples.size() << " (" << interior
            << " interior)\n";
  for (const TriplePoint& tp : triples) {
    std::cout << "  (" << fmt(tp.location.x) << ", " << fmt(tp.location.y)
              << "): tiles";
    for (const int i : tp.tiles) std::cout << " " << i;
    std::cout << (tp.interior ? " [interior]" : " [rim]") << "\n";
  }
  return 0;
}

int cmd_build(const std::string& name, const std::string& gen_file,
              int n, const std::string& out) {
  Tiling t;
  if (name == "rotgen") {
    if (gen_file.empty() || n < 1)
      throw Error("build rotgen requires --gen FILE and --n N");
    const Document doc = parse_document(read_file(gen_file));
    if (doc.kind != Document::Kind::Multicurve || doc.boundaries.size() != 1)
      throw Error(gen_file +
                  ": generator must be a multicurve with one member");
    const Tolerance tol = resolve_tolerance(std::nullopt, doc);
    t = build_rotgen(make_generator(doc.boundaries[0], n, tol), n, tol);
  } else {
    t = build_named(name);
  }
  write_file(out, serialize_tiling(t));
  std::cout << "wrote " << out << " (" << t.tiles.size() << " tiles)\n";
  return 0;
}

int cmd_render(const std::string& file, const std::string& out) {
  const Document doc = parse_document(read_file(file));
  if (doc.kind != Document::Kind::Tiling)
    throw Error(file + ": expected a tiling document");
  write_file(out, render_svg(doc.boundaries));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_equidecomp(const std::string& file_a, const std::string& file_b) {
  const Document da = parse_document(read_file(file_a));
  const Document db = parse_document(read_file(file_b));
  if (da.kind != Document::Kind::Multicurve ||
      db.kind != Document::Kind::Multicurve)
    throw Error("equidecomp expects two multicurve documents");
  const Tolerance tol = resolve_tolerance(std::nullopt, da);
  const Multicurve f = Multicurve::make(da.boundaries, tol);
  const Multicurve g = Multicurve::make(db.boundaries, tol);
  const EquidecompResult res = equidecomposable(f, g, 1e-9, tol);

  auto print_profile = [](const char* label, const LengthProfile& p) {
    std::cout << label << ": segments " << fmt(p.segment_total());
    for (const auto& [r, total] : p.arc_classes())
      std::cout << "; r=" << fmt(r) << ": " << fmt(total);
    std::cout << "\n";
  };
  print_profile("profile A", res.f_profile);
  print_profile("profile B", res.g_profile);
  std::cout << "equidecomposable: " << (res.decision ? "yes" : "no") << "\n";
  if (res.decision) {
    std::cout << "witness pieces: " << res.pieces.size() << "\n";
    for (const auto& [fp, gp] : res.pieces) {
      std::cout << "  A member " << fp.member << " edge " << fp.edge << " ["
                << fmt(fp.t0) << ", " << fmt(fp.t1) << "] <-> B member "
                << gp.member << " edge " << gp.edge << " [" << fmt(gp.t0)
                << ", " << fmt(gp.t1) << "] length "
                << fmt(fp.geometry.length()) << "\n";
    }
  }
  return res.decision ? 0 : 1;
}

int cmd_scan(int kmax, long long nmax, double delta, bool corrected) {
  const auto hits = scan_arc_equation(kmax, nmax, delta, corrected);
  std::cout << "k,n,residual\n";
  for (const ArcEquationHit& h : hits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d,%lld,%.17g\n", h.k, h.n, h.residual);
    std::cout << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monohedral tilings of the closed unit disc"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "named tiling catalog");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list the named tilings");

  std::string build_name, build_gen, build_out;
  int build_n = 0;
  auto* build = app.add_subcommand("build", "construct a tiling document");
  build->add_option("name", build_name,
                    "catalog name, or 'rotgen' with --gen and --n")
      ->required();
  build->add_option("--gen", build_gen, "generator multicurve document");
  build->add_option("--n", build_n, "rotation count for rotgen");
  build->add_option("-o,--output", build_out, "output document")->required();

  std::string verify_file;
  std::optional<double> verify_eps;
  double verify_eps_value = 0.0;
  auto* verify = app.add_subcommand("verify", "validate a tiling document");
  verify->add_option("file", verify_file)->required();
  auto* eps_opt =
      verify->add_option("--eps", verify_eps_value, "tolerance override");

  std::string analyze_file;
  auto* analyze =
      app.add_subcommand("analyze", "diagnostics for a valid tiling");
  analyze->add_option("file", analyze_file)->required();

  std::string render_file, render_out;
  auto* render = app.add_subcommand("render", "render a tiling to SVG");
  render->add_option("file", render_file)->required();
  render->add_option("-o,--output", render_out, "output SVG")->required();

  std::string eq_a, eq_b;
  auto* equidecomp =
      app.add_subcommand("equidecomp", "decide equidecomposability");
  equidecomp->add_option("a", eq_a)->required();
  equidecomp->add_option("b", eq_b)->required();

  int scan_kmax = 200;
  long long scan_nmax = 2000;
  double scan_delta = 1e-9;
  bool scan_corrected = false;
  auto* scan = app.add_subcommand("scan-arc-equation",
                                  "scan sin(2pi/k) = pi(2/k - 4/n)");
  scan->add_option("--kmax", scan_kmax);
  scan->add_option("--nmax", scan_nmax);
  scan->add_option("--delta", scan_delta);
  scan->add_flag("--corrected", scan_corrected,
                 "scan the variant sin(2pi/k) = pi(2/k - 2/n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (catalog->parsed()) {
      for (const std::string& n : disctiler::catalog_names())
        std::cout << n << "\n";
      return 0;
    }
    if (build->parsed())
      return cmd_build(build_name, build_gen, build_n, build_out);
    if (verify->parsed()) {
      if (eps_opt->count() > 0) verify_eps = verify_eps_value;
      return cmd_verify(verify_file, verify_eps);
    }
    if (analyze->parsed()) return cmd_analyze(analyze_file);
    if (render->parsed()) return cmd_render(render_file, render_out);
    if (equidecomp->parsed()) return cmd_equidecomp(eq_a, eq_b);
    if (scan->parsed())
      return cmd_scan(scan_kmax, scan_nmax, scan_delta, scan_corrected);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
