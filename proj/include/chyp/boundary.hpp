#pragma once

#include <map>
#include <string>
#include <vector>

#include "chyp/ford.hpp"

namespace chyp {

// ============================================================================
// The ideal-boundary analysis at theta = pi/3: the named vertices, the
// vertical plane sections, the curve c0, the solid-tube cell complex, the
// glued polyhedron with its face pairings, the edge-cycle relators, and the
// resulting group presentation with its abelianization.
// ============================================================================

// All named boundary points: q2, q3, p1..p15, the S^-1-images p2', p10',
// the plane points v0 and v_m1 = T^-1(v0), and the T^-1-shifted p4_m1, p7_m1.
// Requires the parabolic group.
std::map<std::string, BoundaryPoint> named_points(const TriangleGroup& tg);

// Sphere incidences of every named point plus the parabolic-word fixed-point
// identities of the accidental cusps.
FordReport verify_incidences(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// Vertical plane sections Sigma_0 = {Re z = 1/2} and Sigma_-1 = {Re z = -3/2}.
// ----------------------------------------------------------------------------

enum class SectionClass { kEmpty, kPoint, kCircle };

struct PlaneSection {
  std::string plane;  // "Sigma0" or "Sigma-1"
  SphereId sphere;
  SectionClass cls = SectionClass::kEmpty;
  double min_residual = 0.0;    // min |side_of| over the plane
  HeisenbergPoint closest;      // where the minimum is attained
};

std::vector<PlaneSection> plane_sections(const TriangleGroup& tg, int k_window = 2);
FordReport verify_plane_sections(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// The curve c0 = Sigma_0 ^ boundary(U): two arcs through q3 and
// v0 = [1/2 + i sqrt3/2, -sqrt3].
// ----------------------------------------------------------------------------

struct CurveC0 {
  std::vector<HeisenbergPoint> arc_plus;   // on P0, exterior side of M0
  std::vector<HeisenbergPoint> arc_minus;  // on M0, exterior side of P0
  BoundaryPoint endpoint_q3, endpoint_v0;
};

CurveC0 curve_c0(const TriangleGroup& tg, int samples = 256);
FordReport verify_curve_c0(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// Cell complexes. Faces are carried by sphere boundaries or the two planes;
// every edge lies on exactly two faces.
// ----------------------------------------------------------------------------

struct CellVertex {
  std::string label;
  BoundaryPoint pos;
};

struct CellEdge {
  std::string label;
  std::string v0, v1;
  std::vector<std::string> carriers;  // names of the carrying surfaces
};

struct CellFace {
  std::string label;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;  // boundary cycle
  std::string carrier;
};

struct CellComplex {
  std::vector<CellVertex> vertices;
  std::vector<CellEdge> edges;
  std::vector<CellFace> faces;

  int euler_characteristic() const;
};

// The boundary two-sphere of the solid tube U^c ^ D_T: 13 vertices, 23 edges,
// 12 faces (ten sphere-carried faces and the two plane discs).
CellComplex tube_complex(const TriangleGroup& tg);
FordReport verify_tube_complex(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// The glued polyhedron P and its eight face pairings.
// ----------------------------------------------------------------------------

struct FacePairing {
  std::string name;      // x1..x8
  Word map;
  std::string src_face, dst_face;
  std::vector<std::string> src, dst;  // vertex tuples in corresponding order
};

struct Polyhedron {
  std::vector<CellFace> faces;        // sixteen faces with vertex tuples
  std::vector<FacePairing> pairings;  // eight pairings
  std::map<int, int> face_census;     // tuple arity -> count
};

Polyhedron polyhedron_data();
FordReport verify_polyhedron(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// Edge cycles of P under the pairings, walked combinatorially; each cycle
// closes and yields a relator that is a projective matrix identity.
// ----------------------------------------------------------------------------

struct EdgeCycle {
  std::vector<std::string> edges;  // visited edges, as "a|b" endpoint keys
  std::vector<std::pair<int, int>> relator;  // (pairing index, +-1), application order
  std::string relator_string;                // composition order, e.g. "x7^-1 x5 x7 x1"
  Word st_word;                              // the relator as a word in S, T
};

std::vector<EdgeCycle> edge_cycles(const TriangleGroup& tg);
FordReport verify_edge_cycles(const TriangleGroup& tg);

// ----------------------------------------------------------------------------
// Presentations and abelianization.
// ----------------------------------------------------------------------------

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::pair<int, int>>> relators;  // (generator, exponent) runs
  std::vector<std::string> relator_strings;
};

// <u, v, w | w^-1 v u^-1 v^-1 w u, v^2 w u w^-3 u> with u = x1, v = x2, w = x7.
GroupPresentation quotient_presentation();
// <a, b, c | a^2 c b^4 c, a b c a^-1 b^-1 c^-1>, the census two-cusped target.
GroupPresentation census_presentation();

FordReport verify_presentation(const TriangleGroup& tg);

struct Abelianization {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1
};

// Exact integer Smith normal form of the relator exponent matrix.
Abelianization abelianize(const GroupPresentation& p);

// Exponent matrix rows (one per relator, one column per generator).
std::vector<std::vector<long long>> exponent_matrix(const GroupPresentation& p);

}  // namespace chyp
