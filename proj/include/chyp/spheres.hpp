#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chyp/triangle_group.hpp"

namespace chyp {

// ============================================================================
// Isometric spheres (Cygan spheres) of the group <S, T>, the four labeled
// families obtained by conjugating S, S^-1, S^2, (S^-1 T)^2 with powers of T,
// geographic coordinates, and the intersection machinery built on them.
// ============================================================================

enum class SphereFamily { kPlus, kMinus, kStar, kDiamond };

struct SphereId {
  SphereFamily family = SphereFamily::kPlus;
  int k = 0;

  bool operator==(const SphereId&) const = default;
};

std::string to_string(const SphereId& id);  // "P0", "M-1", "S1", "D2"

// Defining word of a family member: T^k S T^-k, T^k S^-1 T^-k, T^k S^2 T^-k,
// T^k (S^-1 T)^2 T^-k.
Word sphere_word(const SphereId& id);

struct IsometricSphere {
  HeisenbergPoint center;
  double radius = 0.0;
  Word word;
  std::optional<SphereId> id;
};

// Sphere of a group element g not fixing the point at infinity: center at
// g^-1(infinity), radius sqrt(2/|g31|). Throws when g31 ~ 0.
IsometricSphere isometric_sphere(const GroupElement& g);

// Closed-form center/radius of the labeled family member:
//   P_k: [4k cos(th), 8k sin(2th)], sqrt(2)
//   M_k: [4k cos(th) + 2 e^{i th}, 0], sqrt(2)
//   S_k: [4k cos(th) + e^{i th}, 4k sin(2th)], 1
//   D_k: [4k cos(th) - e^{-i th}, 4k sin(2th)], 1
IsometricSphere sphere_of(const SphereId& id, const TriangleGroup& tg);

// Signed margin d_Cyg(p, center)^2 - radius^2: positive outside, negative
// inside, ~0 on the sphere.
double side_of(const HoroPoint& p, const IsometricSphere& s);
double side_of(const BoundaryPoint& p, const IsometricSphere& s);  // throws at infinity

// ----------------------------------------------------------------------------
// Geographic coordinates (alpha, beta, w) on a Cygan sphere of radius r:
// lift (-r^2 e^{-i alpha}/2, r w e^{i(-alpha/2+beta)}, 1) for the sphere
// centered at the origin; other centers reduce to it by the Heisenberg
// translation taking the origin to the center.
// ----------------------------------------------------------------------------

struct GeographicCoord {
  double alpha = 0.0;  // [-pi/2, pi/2]
  double beta = 0.0;   // [0, pi); (beta, w) and (beta+pi, -w) agree
  double w = 0.0;      // [-sqrt(cos alpha), sqrt(cos alpha)]
};

// Throws when |w| > sqrt(cos alpha) (beyond tolerance).
CVec3 geographic_lift(const GeographicCoord& c, double radius);
HoroPoint geographic_point(const GeographicCoord& c, double radius);
HoroPoint geographic_point(const GeographicCoord& c, const IsometricSphere& s);

// The three Cygan-distance residual functions on the geographic chart of the
// radius-sqrt(2) sphere centered at the origin. Their signs match side_of for
// the spheres S_0, M_0 and M_-1 respectively.
enum class SphereFunction { kStar0, kMinus0, kMinusMinus1 };
double f_eval(SphereFunction which, double theta, const GeographicCoord& c);

// ----------------------------------------------------------------------------
// Giraud-disk tracing: zero crossings of side_of(other) on the geographic
// grid of the base sphere, refined by bisection in w.
// ----------------------------------------------------------------------------

struct TraceOptions {
  int grid_alpha = 720;
  int grid_beta = 720;
  int w_scan = 16;          // initial w samples per (alpha, beta) cell
  int bisect_iters = 60;
  double pole_cut = 1e-6;   // skip columns with sqrt(cos alpha) below this
};

struct TracedPoint {
  GeographicCoord gc;      // on the base sphere
  HoroPoint p;
  double base_residual;    // |side_of(p, base)|
  double other_residual;   // |side_of(p, other)|
};

struct GiraudTrace {
  std::vector<TracedPoint> points;
  double min_abs_other = 0.0;  // scan minimum of |side_of(other)|; emptiness evidence
  int components = 0;          // epsilon-graph components (0 when empty)
  bool connected = true;       // components <= 1
};

GiraudTrace giraud_trace(const IsometricSphere& base, const IsometricSphere& other,
                         const TraceOptions& opt = {});

// ----------------------------------------------------------------------------
// The triple intersection P_0 ^ M_0 ^ S_0: two geodesics crossing at the
// fixed point of S, with four ideal endpoints.
// ----------------------------------------------------------------------------

struct TripleCurves {
  std::vector<GeographicCoord> arc_l1_params, arc_c1_params, arc_c2_params;
  std::vector<HoroPoint> arc_l1, arc_c1, arc_c2;
  HoroPoint center;                      // fixed point of S, q(0, theta, sqrt2/2)
  std::array<CVec3, 4> endpoint_lifts;   // cyclically permuted by S in this order
  std::array<HoroPoint, 4> endpoints;
};

TripleCurves triple_curves(const TriangleGroup& tg, int samples_per_arc = 257);

// ----------------------------------------------------------------------------
// Tangencies at theta = pi/3: adjacent same-family pairs and the mixed
// coincidences, each with the parabolic word whose fixed point they share.
// Throws unless tg.parabolic_case.
// ----------------------------------------------------------------------------

struct Tangency {
  SphereId a, b;
  Word word;            // parabolic element fixing the tangency point
  BoundaryPoint point;  // its fixed point
};

std::vector<Tangency> tangency_points(const TriangleGroup& tg, int k_window);

}  // namespace chyp
