#include "chyp/complex3.hpp"

#include <algorithm>
#include <stdexcept>

namespace chyp {

double CVec3::max_abs() const {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

double CVec3::norm() const {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

CMat3 CMat3::identity() {
  CMat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

CMat3 CMat3::diagonal(cplx d0, cplx d1, cplx d2) {
  CMat3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

CMat3 CMat3::from_rows(const CVec3& r0, const CVec3& r1, const CVec3& r2) {
  CMat3 m;
  for (int j = 0; j < 3; ++j) {
    m(0, j) = r0[j];
    m(1, j) = r1[j];
    m(2, j) = r2[j];
  }
  return m;
}

CMat3 CMat3::operator+(const CMat3& o) const {
  CMat3 r;
  for (size_t i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

CMat3 CMat3::operator-(const CMat3& o) const {
  CMat3 r;
  for (size_t i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

CMat3 CMat3::operator*(const CMat3& o) const {
  CMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
  return r;
}

CVec3 CMat3::operator*(const CVec3& x) const {
  CVec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = (*this)(i, 0) * x[0] + (*this)(i, 1) * x[1] + (*this)(i, 2) * x[2];
  return r;
}

CMat3 CMat3::operator*(cplx s) const {
  CMat3 r;
  for (size_t i = 0; i < 9; ++i) r.a[i] = a[i] * s;
  return r;
}

CMat3 CMat3::transpose() const {
  CMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

CMat3 CMat3::conjugate() const {
  CMat3 r;
  for (size_t i = 0; i < 9; ++i) r.a[i] = std::conj(a[i]);
  return r;
}

cplx CMat3::det() const {
  const CMat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

CMat3 CMat3::inverse() const {
  const CMat3& m = *this;
  cplx d = det();
  if (std::abs(d) < 1e-300) throw std::domain_error("CMat3::inverse: singular matrix");
  CMat3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return adj * (1.0 / d);
}

double CMat3::max_abs() const {
  double r = 0.0;
  for (const cplx& x : a) r = std::max(r, std::abs(x));
  return r;
}

CVec3 cross_bilinear(const CVec3& x, const CVec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

CVec3 kernel_vector(const CMat3& m) {
  CVec3 r0 = m.row(0), r1 = m.row(1), r2 = m.row(2);
  CVec3 c01 = cross_bilinear(r0, r1);
  CVec3 c02 = cross_bilinear(r0, r2);
  CVec3 c12 = cross_bilinear(r1, r2);
  CVec3 best = c01;
  if (c02.norm() > best.norm()) best = c02;
  if (c12.norm() > best.norm()) best = c12;
  double scale = std::max({r0.norm(), r1.norm(), r2.norm(), 1e-300});
  if (best.norm() > 1e-12 * scale * scale) return best / best.norm();
  // Rank <= 1: annihilate the dominant row against the weakest unit vector.
  CVec3 r = r0;
  if (r1.norm() > r.norm()) r = r1;
  if (r2.norm() > r.norm()) r = r2;
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(r[i]) < std::abs(r[k])) k = i;
  CVec3 e;
  e[k] = 1.0;
  CVec3 w = cross_bilinear(r, e);
  if (w.norm() < 1e-300) return e;
  return w / w.norm();
}

const CMat3& form_siegel() {
  static const CMat3 h = [] {
    CMat3 m;
    m(0, 2) = m(1, 1) = m(2, 0) = 1.0;
    return m;
  }();
  return h;
}

const CMat3& form_ball() {
  static const CMat3 j = CMat3::diagonal(1.0, 1.0, -1.0);
  return j;
}

const CMat3& cayley_matrix() {
  static const CMat3 c = [] {
    const double s = 1.0 / std::sqrt(2.0);
    CMat3 m;
    m(0, 0) = s;
    m(0, 2) = s;
    m(1, 1) = 1.0;
    m(2, 0) = s;
    m(2, 2) = -s;
    return m;
  }();
  return c;
}

cplx hermitian_product(const CVec3& z, const CVec3& w, const CMat3& form) {
  CVec3 fz = form * z;
  return std::conj(w[0]) * fz[0] + std::conj(w[1]) * fz[1] + std::conj(w[2]) * fz[2];
}

CVec3 cayley_transform(const CVec3& p, CayleyDirection) {
  // C is its own inverse, so both directions multiply by C.
  return cayley_matrix() * p;
}

double bergman_distance(const CVec3& u, const CVec3& v) {
  const CMat3& h = form_siegel();
  double uu = hermitian_product(u, u, h).real();
  double vv = hermitian_product(v, v, h).real();
  double scale_u = u.max_abs(), scale_v = v.max_abs();
  if (uu >= -1e-14 * scale_u * scale_u || vv >= -1e-14 * scale_v * scale_v)
    throw std::domain_error("bergman_distance: argument is not an interior point");
  double num = std::norm(hermitian_product(u, v, h));
  double ratio = num / (uu * vv);
  if (ratio < 1.0) ratio = 1.0;
  return 2.0 * std::acosh(std::sqrt(ratio));
}

CMat3 su_normalize(const CMat3& m) {
  cplx d = m.det();
  if (std::abs(d) < 1e-300) throw std::domain_error("su_normalize: singular matrix");
  // Principal cube root has argument in (-pi/3, pi/3].
  cplx c = std::pow(d, 1.0 / 3.0);
  return m * (1.0 / c);
}

ProjectiveMatch projective_compare(const CVec3& x, const CVec3& y, double tol) {
  double nx = x.norm(), ny = y.norm();
  if (nx < 1e-300 || ny < 1e-300)
    throw std::domain_error("projective_compare: zero vector");
  CVec3 a = x / nx, b = y / ny;
  // Least-squares optimal scalar: lambda = b* a  (unit vectors).
  cplx lambda = std::conj(b[0]) * a[0] + std::conj(b[1]) * a[1] + std::conj(b[2]) * a[2];
  double res = (a - b * lambda).max_abs();
  return {res <= tol, res};
}

ProjectiveMatch projective_compare(const CMat3& x, const CMat3& y, double tol) {
  CMat3 a = su_normalize(x), b = su_normalize(y);
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  double best = std::numeric_limits<double>::infinity();
  cplx lambda = 1.0;
  for (int k = 0; k < 3; ++k) {
    best = std::min(best, (a - b * lambda).max_abs());
    lambda *= omega;
  }
  return {best <= tol, best};
}

namespace {

cplx eval_cubic(cplx c2, cplx c1, cplx c0, cplx x) { return ((x - c2) * x + c1) * x - c0; }

cplx eval_cubic_deriv(cplx c2, cplx c1, cplx x) { return (3.0 * x - 2.0 * c2) * x + c1; }

}  // namespace

std::array<cplx, 3> eigenvalues(const CMat3& m) {
  // Characteristic polynomial  x^3 - c2 x^2 + c1 x - c0.
  cplx c2 = m.trace();
  cplx c1 = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
            (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  cplx c0 = m.det();

  // Depressed cubic t^3 + p t + q with x = t + c2/3.
  cplx shift = c2 / 3.0;
  cplx p = c1 - c2 * c2 / 3.0;
  cplx q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;

  std::array<cplx, 3> roots;
  cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Pick the branch that avoids cancellation against -q/2.
  cplx u3 = -q / 2.0 + disc;
  cplx u3_alt = -q / 2.0 - disc;
  if (std::abs(u3_alt) > std::abs(u3)) u3 = u3_alt;
  if (std::abs(u3) < 1e-300) {
    roots = {shift, shift, shift};
  } else {
    cplx u = std::pow(u3, 1.0 / 3.0);
    cplx v = -p / (3.0 * u);
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    cplx w1 = 1.0;
    for (int k = 0; k < 3; ++k) {
      roots[static_cast<size_t>(k)] = u * w1 + v * std::conj(w1) + shift;
      w1 *= omega;
    }
  }
  // Newton polish against the undepressed polynomial.
  for (auto& r : roots) {
    for (int step = 0; step < 2; ++step) {
      cplx d = eval_cubic_deriv(c2, c1, r);
      if (std::abs(d) < 1e-100) break;
      r -= eval_cubic(c2, c1, c0, r) / d;
    }
  }
  return roots;
}

}  // namespace chyp
