#pragma once

#include <array>
#include <complex>
#include <cmath>

namespace chyp {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// ============================================================================
// Fixed-size complex linear algebra on C^3. Everything here is closed-form;
// matrices are row-major.
// ============================================================================

struct CVec3 {
  std::array<cplx, 3> v{};

  CVec3() = default;
  CVec3(cplx a, cplx b, cplx c) : v{a, b, c} {}

  cplx& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const cplx& operator[](int i) const { return v[static_cast<size_t>(i)]; }

  CVec3 operator+(const CVec3& o) const { return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}; }
  CVec3 operator-(const CVec3& o) const { return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}; }
  CVec3 operator*(cplx s) const { return {v[0] * s, v[1] * s, v[2] * s}; }
  CVec3 operator/(cplx s) const { return {v[0] / s, v[1] / s, v[2] / s}; }

  double max_abs() const;
  double norm() const;  // Euclidean 2-norm
  CVec3 conjugate() const { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }
};

struct CMat3 {
  std::array<cplx, 9> a{};

  cplx& operator()(int i, int j) { return a[static_cast<size_t>(3 * i + j)]; }
  const cplx& operator()(int i, int j) const { return a[static_cast<size_t>(3 * i + j)]; }

  static CMat3 identity();
  static CMat3 diagonal(cplx d0, cplx d1, cplx d2);
  static CMat3 from_rows(const CVec3& r0, const CVec3& r1, const CVec3& r2);

  CVec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
  CVec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  CMat3 operator+(const CMat3& o) const;
  CMat3 operator-(const CMat3& o) const;
  CMat3 operator*(const CMat3& o) const;
  CVec3 operator*(const CVec3& x) const;
  CMat3 operator*(cplx s) const;

  CMat3 transpose() const;
  CMat3 conjugate() const;
  CMat3 adjoint() const { return conjugate().transpose(); }
  cplx trace() const { return a[0] + a[4] + a[8]; }
  cplx det() const;
  CMat3 inverse() const;  // adjugate / det; throws on singular input
  double max_abs() const;
};

// Bilinear (unconjugated) cross product: the result annihilates both rows
// under the plain dot product, which is what kernel extraction needs.
CVec3 cross_bilinear(const CVec3& x, const CVec3& y);

// A kernel vector of a rank-deficient matrix, from the best-conditioned pair
// of rows (falls back to a single-row annihilator for rank <= 1).
CVec3 kernel_vector(const CMat3& m);

// ============================================================================
// Hermitian machinery for the two standard forms.
// ============================================================================

// Siegel-domain form: anti-diagonal (0 0 1 / 0 1 0 / 1 0 0).
const CMat3& form_siegel();
// Ball-model form: diag(1, 1, -1).
const CMat3& form_ball();
// Cayley transform C with C* H C = J; C is an involution.
const CMat3& cayley_matrix();

// <z,w> = w* F z.  Conjugate-symmetric, linear in the first slot.
cplx hermitian_product(const CVec3& z, const CVec3& w, const CMat3& form);

enum class CayleyDirection { kToBall, kToSiegel };

// Exchanges Siegel-domain and ball-model homogeneous coordinates.
CVec3 cayley_transform(const CVec3& p, CayleyDirection dir);

// Distance from cosh^2(d/2) = <u,v><v,u> / (<u,u><v,v>), Siegel form.
// Both arguments must have negative self-product.
double bergman_distance(const CVec3& u, const CVec3& v);

// Scale a determinant-nonzero matrix to determinant 1, dividing by the cube
// root of det with argument in (-pi/3, pi/3].
CMat3 su_normalize(const CMat3& m);

struct ProjectiveMatch {
  bool equal = false;
  double residual = 0.0;
};

// Vectors compare up to an arbitrary complex scalar (least-squares optimal
// lambda after normalizing both to unit length); matrices compare after SU
// normalization, minimizing over the cube roots of unity.
// Residual is the max-entry deviation. Throws on zero input.
ProjectiveMatch projective_compare(const CVec3& x, const CVec3& y, double tol);
ProjectiveMatch projective_compare(const CMat3& x, const CMat3& y, double tol);

// Roots of the characteristic polynomial, closed-form Cardano with a
// cancellation-avoiding branch choice and one Newton polish per root.
std::array<cplx, 3> eigenvalues(const CMat3& m);

}  // namespace chyp
