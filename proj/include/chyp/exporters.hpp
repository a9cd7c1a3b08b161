#pragma once

#include <string>
#include <vector>

#include "chyp/boundary.hpp"

namespace chyp {

// ============================================================================
// Figure exports. CSV rows are (kind, label, alpha, beta, w, x, y, t) with
// blanks where a column does not apply; OBJ embeds Heisenberg coordinates as
// (x, y, t). All output is deterministic for a fixed configuration.
// ============================================================================

struct CsvRow {
  std::string kind;
  std::string label;
  bool has_geo = false;
  double alpha = 0.0, beta = 0.0, w = 0.0;
  double x = 0.0, y = 0.0, t = 0.0;
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows);

struct ObjMesh {
  std::vector<std::array<double, 3>> vertices;         // (x, y, t)
  std::vector<std::vector<int>> polylines;             // 0-based vertex indices
  std::vector<std::array<int, 3>> triangles;           // 0-based
};

void write_obj(const std::string& path, const ObjMesh& mesh);

// Ideal boundary of a Cygan sphere as a triangulated mesh: the two sheets
// w = +-sqrt(cos alpha) over an (alpha, beta) grid.
ObjMesh sphere_boundary_mesh(const IsometricSphere& s, int n_alpha, int n_beta);

// The labeled sphere boundaries for k in [k_min, k_max], one OBJ per call.
ObjMesh spheres_figure(const TriangleGroup& tg, int k_min, int k_max, int grid);

// Crossed-geodesic triple intersection curves as polylines, plus CSV rows.
ObjMesh triple_curves_figure(const TriangleGroup& tg, int samples,
                             std::vector<CsvRow>* rows);

// The curve c0 and its arcs.
ObjMesh c0_figure(const TriangleGroup& tg, int samples, std::vector<CsvRow>* rows);

// Traced Giraud intersection of a labeled sphere pair.
std::vector<CsvRow> giraud_figure(const TriangleGroup& tg, const SphereId& a,
                                  const SphereId& b, const TraceOptions& opt);

// The T-invariant line.
std::vector<CsvRow> rcircle_figure(int samples, double x_min, double x_max);

// Tube complex and polyhedron as labeled vertices plus edge polylines.
// Edges to the point at infinity render as vertical segments of fixed height.
ObjMesh complex_figure(const TriangleGroup& tg, std::vector<CsvRow>* rows);
ObjMesh polyhedron_figure(const TriangleGroup& tg, std::vector<CsvRow>* rows);

// JSON dumps.
std::string cell_complex_json(const CellComplex& cc);
std::string polyhedron_json(const Polyhedron& p, const TriangleGroup& tg);

}  // namespace chyp
