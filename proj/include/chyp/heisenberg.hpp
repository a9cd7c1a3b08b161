#pragma once

#include <stdexcept>
#include <vector>

#include "chyp/complex3.hpp"

namespace chyp {

// ============================================================================
// The ideal boundary as the Heisenberg group N = C x R plus a point at
// infinity; closure points carry horospherical coordinates (z, t, u).
// ============================================================================

struct HeisenbergPoint {
  cplx z{0.0, 0.0};
  double t = 0.0;
};

// [z,t].[w,s] = [z+w, t+s-2*Im(conj(z) w)]
HeisenbergPoint heisenberg_product(const HeisenbergPoint& a, const HeisenbergPoint& b);
HeisenbergPoint heisenberg_inverse(const HeisenbergPoint& a);

struct BoundaryPoint {
  bool at_infinity = false;
  HeisenbergPoint p;

  static BoundaryPoint infinity() { return {true, {}}; }
  static BoundaryPoint finite(cplx z, double t) { return {false, {z, t}}; }
  static BoundaryPoint finite(const HeisenbergPoint& q) { return {false, q}; }
};

// Closure point in horospherical coordinates; u = 0 on the boundary,
// u > 0 in the interior. Never the point at infinity.
struct HoroPoint {
  cplx z{0.0, 0.0};
  double t = 0.0;
  double u = 0.0;
};

CVec3 standard_lift(const HeisenbergPoint& q);   // ((-|z|^2+it)/2, z, 1)
CVec3 standard_lift(const BoundaryPoint& q);     // infinity -> (1,0,0)
CVec3 standard_lift(const HoroPoint& q);         // ((-|z|^2-u+it)/2, z, 1)

struct LiftedPoint {
  bool at_infinity = false;
  HoroPoint p;  // valid when finite; u = 0 marks a boundary point

  BoundaryPoint boundary() const;  // throws unless u ~ 0 or at infinity
};

// Inverse of the standard lift. Accepts null and negative vectors; a
// positive vector is a domain error. A third coordinate below 1e-10 of the
// largest component maps to infinity.
LiftedPoint from_lift(const CVec3& v);

// The extended Cygan distance. When either argument lies on the boundary
// (u = 0) this equals |2<p,q>|^{1/2} on standard lifts, which is the gauge
// every sphere membership test uses.
double cygan_distance(const HoroPoint& p, const HoroPoint& q);
double cygan_distance(const HeisenbergPoint& p, const HeisenbergPoint& q);
double cygan_distance(const BoundaryPoint& p, const BoundaryPoint& q);  // throws on infinity

// Max deviation in the horospherical coordinates themselves. Agreement
// checks use this gauge: the Cygan metric scales like the square root of a
// coordinate perturbation, which would misstate numeric accuracy.
double coord_distance(const HoroPoint& p, const HoroPoint& q);
double coord_distance(const HeisenbergPoint& p, const HeisenbergPoint& q);
double coord_distance(const BoundaryPoint& p, const BoundaryPoint& q);  // inf vs finite = inf

inline HoroPoint to_horo(const HeisenbergPoint& q) { return {q.z, q.t, 0.0}; }
inline HoroPoint to_horo(const BoundaryPoint& q);

// ----------------------------------------------------------------------------
// Boundary circle sampling. C-circles here are the vertical lines and the
// t = 0 round circle; R-circles are the straight-line class, which covers the
// x-axis and its Heisenberg translates.
// ----------------------------------------------------------------------------

struct CCircleSpec {
  enum class Kind { kVerticalLine, kHorizontalCircle } kind = Kind::kVerticalLine;
  cplx z0{0.0, 0.0};    // vertical line: fixed z; circle: center
  double radius = 1.0;  // circle only
  double t_min = -10.0, t_max = 10.0;
};

struct RCircleSpec {
  enum class Kind { kXAxis, kTInvariantLine } kind = Kind::kXAxis;
  double x_min = -1.0, x_max = 1.0;
};

// n >= 2 required; both endpoints included for line-type specs.
std::vector<HeisenbergPoint> sample_ccircle(const CCircleSpec& spec, int n);
std::vector<HeisenbergPoint> sample_rcircle(const RCircleSpec& spec, int n);

inline HoroPoint to_horo(const BoundaryPoint& q) {
  if (q.at_infinity) throw std::domain_error("to_horo: point at infinity");
  return {q.p.z, q.p.t, 0.0};
}

}  // namespace chyp
