// Command-line front end: verification suites with JSON reports, figure
// exports (CSV/OBJ), isometry classification, and the boundary-manifold
// presentation.
//
// Exit codes: 0 all checks pass, 1 claim failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "chyp/exporters.hpp"

using namespace chyp;

namespace {

double parse_theta(const std::string& text) {
  if (text == "0") return 0.0;
  if (text == "pi/3") return kPi / 3.0;
  if (text == "pi/4") return kPi / 4.0;
  if (text == "pi/6") return kPi / 6.0;
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--theta", "expected a decimal or one of 0, pi/6, pi/4, pi/3");
  }
}

std::string class_string(const IsometryClass& c) {
  switch (c.type) {
    case IsometryType::kIdentity: return "identity";
    case IsometryType::kLoxodromic: return "loxodromic";
    case IsometryType::kParabolic: return c.unipotent ? "parabolic (unipotent)" : "parabolic";
    case IsometryType::kElliptic:
      if (c.order > 0) return "elliptic of order " + std::to_string(c.order);
      return "elliptic";
  }
  return "?";
}

void print_class(const std::string& name, const GroupElement& g) {
  cplx tr = su_normalize(g.m).trace();
  std::printf("%-14s trace (%.9g, %.9g)  %s\n", name.c_str(), tr.real(), tr.imag(),
              class_string(classify(g)).c_str());
}

int run_classify(double theta) {
  TriangleGroup tg = build_triangle_group(theta);
  std::printf("theta = %.12g\n", theta);
  print_class("S", tg.S);
  print_class("T", tg.T);
  print_class("I1 I3 I2 I3", {su_normalize(tg.I1.m * tg.I3.m * tg.I2.m * tg.I3.m), {}});
  print_class("(T^-1 S^2)^2",
              evaluate(tg, {Letter::kTInv, Letter::kS, Letter::kS, Letter::kTInv, Letter::kS,
                            Letter::kS}));
  return 0;
}

int run_verify(const std::string& suite, double theta, int k_window, int grid,
               const std::string& json_path, double warn_tol) {
  if (grid < 64) throw CLI::ValidationError("--grid", "grid must be at least 64");
  TraceOptions opt;
  opt.grid_alpha = grid;
  opt.grid_beta = grid;
  TriangleGroup tg = build_triangle_group(theta);

  const bool needs_parabolic =
      suite == "horoballs" || suite == "boundary";
  if (needs_parabolic && !tg.parabolic_case)
    throw CLI::ValidationError("suite '" + suite + "' requires --theta pi/3");
  if ((suite == "pairwise" || suite == "triple" || suite == "all") &&
      theta > kPi / 3.0 + 1e-12)
    throw CLI::ValidationError("suite '" + suite + "' requires theta in [0, pi/3]");

  FordReport rep;
  rep.theta = theta;
  rep.k_window = k_window;
  auto want = [&](const char* name) { return suite == name || suite == "all"; };

  if (want("pairwise")) {
    rep.merge(verify_sphere_table(tg, -k_window, k_window));
    rep.merge(verify_pairwise(tg, k_window, opt));
  }
  if (want("triple")) rep.merge(verify_triple(tg));
  if (want("pairings")) rep.merge(verify_side_pairings(tg, opt));
  if (want("cycles")) rep.merge(cycle_check(tg, opt));
  if (want("horoballs") || (suite == "all" && tg.parabolic_case))
    rep.merge(horoball_consistency(tg));
  if (want("boundary") || (suite == "all" && tg.parabolic_case)) {
    rep.merge(verify_incidences(tg));
    rep.merge(verify_plane_sections(tg));
    rep.merge(verify_curve_c0(tg));
    rep.merge(verify_tube_complex(tg));
    rep.merge(verify_polyhedron(tg));
    rep.merge(verify_edge_cycles(tg));
    rep.merge(verify_presentation(tg));
  }

  int near = 0;
  for (const ClaimRecord& c : rep.claims) {
    std::printf("[%s] %-60s margin %.3e%s\n", c.pass ? "pass" : "FAIL", c.id.c_str(), c.margin,
                c.note.empty() ? "" : ("  (" + c.note + ")").c_str());
    if (warn_tol > 0.0 && c.pass && std::abs(c.margin) < warn_tol) ++near;
  }
  std::printf("%zu claims, %d failed", rep.claims.size(), rep.failed());
  if (warn_tol > 0.0) std::printf(", %d within warn tolerance %.1e", near, warn_tol);
  std::printf("\n");

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::fprintf(stderr, "cannot write %s\n", json_path.c_str());
      return 3;
    }
    out << report_json(rep) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int run_export(const std::string& what, double theta, int k_window, int grid,
               const std::string& out_dir, const std::string& pair_a,
               const std::string& pair_b) {
  TriangleGroup tg = build_triangle_group(theta);
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);

  auto parse_id = [](const std::string& s) {
    if (s.size() < 2) throw CLI::ValidationError("sphere id must look like P0, M-1, S1, D2");
    SphereFamily f;
    switch (s[0]) {
      case 'P': f = SphereFamily::kPlus; break;
      case 'M': f = SphereFamily::kMinus; break;
      case 'S': f = SphereFamily::kStar; break;
      case 'D': f = SphereFamily::kDiamond; break;
      default: throw CLI::ValidationError("sphere family must be one of P, M, S, D");
    }
    return SphereId{f, std::stoi(s.substr(1))};
  };

  try {
    if (what == "spheres") {
      write_obj((dir / "spheres.obj").string(),
                spheres_figure(tg, -k_window, k_window, std::max(16, grid / 16)));
    } else if (what == "giraud") {
      TraceOptions opt;
      opt.grid_alpha = grid;
      opt.grid_beta = grid;
      SphereId a = parse_id(pair_a), b = parse_id(pair_b);
      write_csv((dir / ("giraud_" + to_string(a) + "_" + to_string(b) + ".csv")).string(),
                giraud_figure(tg, a, b, opt));
    } else if (what == "triple-curves") {
      std::vector<CsvRow> rows;
      ObjMesh mesh = triple_curves_figure(tg, std::max(65, grid / 4), &rows);
      write_obj((dir / "triple_curves.obj").string(), mesh);
      write_csv((dir / "triple_curves.csv").string(), rows);
    } else if (what == "c0") {
      std::vector<CsvRow> rows;
      ObjMesh mesh = c0_figure(tg, std::max(64, grid / 4), &rows);
      write_obj((dir / "c0.obj").string(), mesh);
      write_csv((dir / "c0.csv").string(), rows);
    } else if (what == "complex") {
      std::vector<CsvRow> rows;
      ObjMesh mesh = complex_figure(tg, &rows);
      write_obj((dir / "complex.obj").string(), mesh);
      write_csv((dir / "complex.csv").string(), rows);
      std::ofstream out(dir / "complex.json");
      out << cell_complex_json(tube_complex(tg)) << "\n";
    } else if (what == "polyhedron") {
      std::vector<CsvRow> rows;
      ObjMesh mesh = polyhedron_figure(tg, &rows);
      write_obj((dir / "polyhedron.obj").string(), mesh);
      write_csv((dir / "polyhedron.csv").string(), rows);
      std::ofstream out(dir / "polyhedron.json");
      out << polyhedron_json(polyhedron_data(), tg) << "\n";
    } else if (what == "rcircle") {
      write_csv((dir / "rcircle.csv").string(), rcircle_figure(257, -2.0, 2.0));
    } else {
      throw CLI::ValidationError("unknown export target '" + what + "'");
    }
  } catch (const std::runtime_error& ex) {
    std::fprintf(stderr, "export failed: %s\n", ex.what());
    return 3;
  }
  std::printf("wrote %s exports to %s\n", what.c_str(), dir.string().c_str());
  return 0;
}

std::string abelianization_string(const Abelianization& a) {
  std::string s = "Z^" + std::to_string(a.free_rank);
  for (long long t : a.torsion) s += " + Z/" + std::to_string(t);
  return s;
}

int run_presentation() {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  std::printf("edge-cycle relations of the glued polyhedron:\n");
  for (const EdgeCycle& c : edge_cycles(tg))
    std::printf("  %s = 1    (as S,T word: %s)\n", c.relator_string.c_str(),
                word_string(reduce_word(c.st_word)).c_str());

  GroupPresentation quot = quotient_presentation();
  std::printf("\nboundary-manifold fundamental group (u = x1, v = x2, w = x7):\n");
  std::printf("  < u, v, w | %s = %s = 1 >\n", quot.relator_strings[0].c_str(),
              quot.relator_strings[1].c_str());

  GroupPresentation census = census_presentation();
  std::printf("\ncensus manifold s782 fundamental group:\n");
  std::printf("  < a, b, c | %s = %s = 1 >\n", census.relator_strings[0].c_str(),
              census.relator_strings[1].c_str());

  Abelianization qa = abelianize(quot), ca = abelianize(census);
  if (qa.free_rank == ca.free_rank && qa.torsion == ca.torsion)
    std::printf("\nabelianization: %s (both)\n", abelianization_string(qa).c_str());
  else
    std::printf("\nabelianization MISMATCH: %s vs %s\n", abelianization_string(qa).c_str(),
                abelianization_string(ca).c_str());
  return qa.free_rank == ca.free_rank && qa.torsion == ca.torsion ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex hyperbolic (4,4,inf) triangle-group toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string theta_text = "pi/3";
  int k_window = 5;
  int grid = 720;
  double tol = 0.0;
  std::string out_dir = "out";
  std::string json_path;
  unsigned seed = 0;

  app.add_option("--theta", theta_text, "parameter (decimal or 0, pi/6, pi/4, pi/3)")
      ->capture_default_str();
  app.add_option("--k-window", k_window, "sphere index window |k| <= K")->capture_default_str();
  app.add_option("--grid", grid, "trace grid resolution (>= 64)")->capture_default_str();
  app.add_option("--tol", tol, "warn for passing margins below this value");
  app.add_option("--out", out_dir, "output directory for exports")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_option("--seed", seed, "seed for sampling strategies (reserved; suites are deterministic)");

  auto* classify_cmd = app.add_subcommand("classify", "classify the marked isometries");
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite,
                         "pairwise | triple | pairings | cycles | horoballs | boundary | all")
      ->check(CLI::IsMember(
          {"pairwise", "triple", "pairings", "cycles", "horoballs", "boundary", "all"}));
  std::string what = "spheres";
  std::string pair_a = "P0", pair_b = "M0";
  auto* export_cmd = app.add_subcommand("export", "write figure point clouds and meshes");
  export_cmd->add_option("what", what,
                         "spheres | giraud | triple-curves | c0 | complex | polyhedron | rcircle")
      ->check(CLI::IsMember(
          {"spheres", "giraud", "triple-curves", "c0", "complex", "polyhedron", "rcircle"}));
  export_cmd->add_option("--pair-a", pair_a, "first sphere id for giraud")->capture_default_str();
  export_cmd->add_option("--pair-b", pair_b, "second sphere id for giraud")->capture_default_str();
  auto* pres_cmd = app.add_subcommand("presentation", "print relators and abelianizations");

  try {
    app.parse(argc, argv);
    double theta = parse_theta(theta_text);
    if (classify_cmd->parsed()) return run_classify(theta);
    if (verify_cmd->parsed()) return run_verify(suite, theta, k_window, grid, json_path, tol);
    if (export_cmd->parsed())
      return run_export(what, theta, k_window, grid, out_dir, pair_a, pair_b);
    if (pres_cmd->parsed()) return run_presentation();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::domain_error& ex) {
    std::fprintf(stderr, "usage error: %s\n", ex.what());
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::fprintf(stderr, "usage error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 3;
  }
  return 2;
}
