#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chyp/spheres.hpp"

namespace chyp {

// ============================================================================
// The Ford domain D: intersection of the closed exteriors of all labeled
// isometric spheres. Membership margins, the pairwise-intersection suite,
// side pairings, ridge cycles, local tessellation counts, and the cusp
// consistency checks at theta = pi/3.
// ============================================================================

struct ClaimRecord {
  std::string id;
  std::string kind;  // disjoint | ridge | contained | tangent | table | ...
  bool pass = false;
  double margin = 0.0;
  int samples = 0;
  std::optional<HoroPoint> witness;
  std::string note;
};

struct FordReport {
  double theta = 0.0;
  int k_window = 0;
  std::vector<ClaimRecord> claims;

  bool all_pass() const;
  int failed() const;
  void merge(const FordReport& other);
};

std::string report_json(const FordReport& r);

struct FordMargin {
  double margin = 0.0;
  SphereId argmin;
};

// Minimum of side_of over all spheres with |k| <= K; >= 0 means the point
// lies in D up to the window truncation. K < 2 is a domain error.
FordMargin ford_margin(const HoroPoint& p, const TriangleGroup& tg, int K);

// Closed-form center/radius against the defining word, all four families,
// k in [k_min, k_max].
FordReport verify_sphere_table(const TriangleGroup& tg, int k_min, int k_max, double tol = 1e-9);

// The trichotomy of sphere-pair intersections inside the window: disjointness
// by center distance (falling back to traced sampling), ridge pairs traced
// and checked for connectedness, containment clauses checked pointwise on
// traced samples, adjacent same-family tangencies at theta = pi/3.
FordReport verify_pairwise(const TriangleGroup& tg, int K, const TraceOptions& opt = {});

// Grid-plus-refinement minimization of max(|f_star|, |f_minusminus1|) over
// the geographic chart: positive lower-bound evidence for theta < pi/3, and
// localization of the unique contact point at pi/3.
struct TripleScan {
  double min_value = 0.0;
  GeographicCoord argmin;
  HoroPoint argmin_point;
};
TripleScan triple_scan(const TriangleGroup& tg, int grid = 72);
FordReport verify_triple(const TriangleGroup& tg);

// Side-pairing data: T^k S T^-k sends the plus-side to the minus-side,
// T^k S^2 T^-k and T^k (S^-1 T)^2 T^-k pair the star and diamond sides with
// themselves.
struct SidePairing {
  SphereId side;
  Word map;
  SphereId image;
};
std::vector<SidePairing> side_pairing_table(int k_window);

// Numeric verification of the pairings on traced ridge samples.
FordReport verify_side_pairings(const TriangleGroup& tg, const TraceOptions& opt = {},
                                int samples = 100);

// Cycle relations T^k S^4 T^-k = T^k (T^-1 S)^4 T^-k = 1 and the
// three-copies-per-ridge count via the smallest-of-three-quantities test at
// pushed-off ridge samples.
FordReport cycle_check(const TriangleGroup& tg, const TraceOptions& opt = {}, int samples = 100);

// Cusp-cycle checks at theta = pi/3: S.S.S^-2 = 1, the mixed cusp word equals
// (T^-1 S^2)^2 which is unipotent parabolic and fixes its cusp point.
FordReport horoball_consistency(const TriangleGroup& tg);

// Traced ridge samples filtered to the Ford boundary (margin >= -1e-8).
std::vector<HoroPoint> ridge_samples(const TriangleGroup& tg, const SphereId& a,
                                     const SphereId& b, int want, const TraceOptions& opt = {});

}  // namespace chyp
