#include "chyp/heisenberg.hpp"

#include <limits>
#include <stdexcept>

namespace chyp {

HeisenbergPoint heisenberg_product(const HeisenbergPoint& a, const HeisenbergPoint& b) {
  return {a.z + b.z, a.t + b.t - 2.0 * std::imag(std::conj(a.z) * b.z)};
}

HeisenbergPoint heisenberg_inverse(const HeisenbergPoint& a) { return {-a.z, -a.t}; }

CVec3 standard_lift(const HeisenbergPoint& q) {
  return {cplx(-std::norm(q.z), q.t) * 0.5, q.z, 1.0};
}

CVec3 standard_lift(const BoundaryPoint& q) {
  if (q.at_infinity) return {1.0, 0.0, 0.0};
  return standard_lift(q.p);
}

CVec3 standard_lift(const HoroPoint& q) {
  return {cplx(-std::norm(q.z) - q.u, q.t) * 0.5, q.z, 1.0};
}

BoundaryPoint LiftedPoint::boundary() const {
  if (at_infinity) return BoundaryPoint::infinity();
  if (std::abs(p.u) > 1e-8)
    throw std::domain_error("LiftedPoint::boundary: interior point");
  return BoundaryPoint::finite(p.z, p.t);
}

LiftedPoint from_lift(const CVec3& v) {
  double scale = v.max_abs();
  if (scale < 1e-300) throw std::domain_error("from_lift: zero vector");
  if (std::abs(v[2]) < 1e-10 * scale) return {true, {}};
  cplx w0 = v[0] / v[2];
  cplx w1 = v[1] / v[2];
  double u = -2.0 * w0.real() - std::norm(w1);
  double t = 2.0 * w0.imag();
  if (u < -1e-9 * std::max(1.0, std::norm(w1)))
    throw std::domain_error("from_lift: positive vector");
  if (u < 0.0) u = 0.0;
  return {false, {w1, t, u}};
}

double cygan_distance(const HoroPoint& p, const HoroPoint& q) {
  // Extended Cygan distance | |z-w|^2 + |u-v| - i(t - s + 2 Im(z conj(w))) |^{1/2}.
  // On lifts, |2<p,q>| carries u + v in the real part instead of |u - v|;
  // the two agree whenever either point lies on the boundary, which covers
  // every sphere-membership computation (centers are boundary points).
  double re = std::norm(p.z - q.z) + std::abs(p.u - q.u);
  double im = p.t - q.t + 2.0 * std::imag(p.z * std::conj(q.z));
  return std::sqrt(std::hypot(re, im));
}

double cygan_distance(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return cygan_distance(to_horo(p), to_horo(q));
}

double cygan_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.at_infinity || q.at_infinity)
    throw std::domain_error("cygan_distance: point at infinity");
  return cygan_distance(p.p, q.p);
}

double coord_distance(const HoroPoint& p, const HoroPoint& q) {
  return std::max({std::abs(p.z - q.z), std::abs(p.t - q.t), std::abs(p.u - q.u)});
}

double coord_distance(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return std::max(std::abs(p.z - q.z), std::abs(p.t - q.t));
}

double coord_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.at_infinity != q.at_infinity) return std::numeric_limits<double>::infinity();
  if (p.at_infinity) return 0.0;
  return coord_distance(p.p, q.p);
}

std::vector<HeisenbergPoint> sample_ccircle(const CCircleSpec& spec, int n) {
  if (n < 2) throw std::invalid_argument("sample_ccircle: need n >= 2");
  std::vector<HeisenbergPoint> out;
  out.reserve(static_cast<size_t>(n));
  if (spec.kind == CCircleSpec::Kind::kVerticalLine) {
    for (int i = 0; i < n; ++i) {
      double t = spec.t_min + (spec.t_max - spec.t_min) * i / (n - 1);
      out.push_back({spec.z0, t});
    }
  } else {
    for (int i = 0; i < n; ++i) {
      double phi = 2.0 * kPi * i / n;
      out.push_back({spec.z0 + spec.radius * cplx(std::cos(phi), std::sin(phi)), 0.0});
    }
  }
  return out;
}

std::vector<HeisenbergPoint> sample_rcircle(const RCircleSpec& spec, int n) {
  if (n < 2) throw std::invalid_argument("sample_rcircle: need n >= 2");
  std::vector<HeisenbergPoint> out;
  out.reserve(static_cast<size_t>(n));
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  for (int i = 0; i < n; ++i) {
    double x = spec.x_min + (spec.x_max - spec.x_min) * i / (n - 1);
    if (spec.kind == RCircleSpec::Kind::kXAxis)
      out.push_back({cplx(x, 0.0), 0.0});
    else
      out.push_back({cplx(x, half_sqrt3), std::sqrt(3.0) * x});
  }
  return out;
}

}  // namespace chyp
