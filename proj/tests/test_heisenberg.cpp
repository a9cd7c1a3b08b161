#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chyp/heisenberg.hpp"

using namespace chyp;

namespace {

std::mt19937 rng(777);

HeisenbergPoint random_point() {
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  return {cplx(d(rng), d(rng)), d(rng)};
}

}  // namespace

TEST_CASE("heisenberg group law") {
  HeisenbergPoint id{};
  HeisenbergPoint p{cplx(1.5, -0.5), 2.0};
  auto lp = heisenberg_product(id, p);
  CHECK(std::abs(lp.z - p.z) < 1e-15);
  CHECK(lp.t == doctest::Approx(p.t));

  // Hand-evaluated product: [2, 4 sqrt3] . [(-1+i sqrt3)/2, -sqrt3]
  //                       = [(3+i sqrt3)/2, sqrt3].
  const double s3 = std::sqrt(3.0);
  auto prod = heisenberg_product({2.0, 4.0 * s3}, {cplx(-0.5, s3 / 2.0), -s3});
  CHECK(std::abs(prod.z - cplx(1.5, s3 / 2.0)) < 1e-14);
  CHECK(prod.t == doctest::Approx(s3).epsilon(1e-14));

  for (int i = 0; i < 50; ++i) {
    HeisenbergPoint a = random_point();
    auto e = heisenberg_product(a, heisenberg_inverse(a));
    CHECK(std::abs(e.z) < 1e-14);
    CHECK(std::abs(e.t) < 1e-12);
  }
}

TEST_CASE("heisenberg product is associative with two-sided identity") {
  for (int i = 0; i < 100; ++i) {
    HeisenbergPoint a = random_point(), b = random_point(), c = random_point();
    auto lhs = heisenberg_product(heisenberg_product(a, b), c);
    auto rhs = heisenberg_product(a, heisenberg_product(b, c));
    CHECK(std::abs(lhs.z - rhs.z) < 1e-12);
    CHECK(lhs.t == doctest::Approx(rhs.t).epsilon(1e-12));
    auto r = heisenberg_product(a, HeisenbergPoint{});
    CHECK(std::abs(r.z - a.z) < 1e-15);
    CHECK(r.t == doctest::Approx(a.t));
  }
}

TEST_CASE("standard lifts") {
  CVec3 o = standard_lift(HeisenbergPoint{});
  CHECK((o - CVec3{0.0, 0.0, 1.0}).max_abs() < 1e-15);

  CVec3 inf = standard_lift(BoundaryPoint::infinity());
  CHECK((inf - CVec3{1.0, 0.0, 0.0}).max_abs() < 1e-15);

  // p2 = [e^{i 2pi/3}, -sqrt3] lifts to ((-1 - i sqrt3)/2, e^{i 2pi/3}, 1).
  const double s3 = std::sqrt(3.0);
  cplx z(-0.5, s3 / 2.0);
  CVec3 lift = standard_lift(HeisenbergPoint{z, -s3});
  CHECK(std::abs(lift[0] - cplx(-0.5, -s3 / 2.0)) < 1e-15);
  CHECK(std::abs(lift[1] - z) < 1e-15);
  CHECK(std::abs(lift[2] - 1.0) < 1e-15);

  // Finite boundary lifts are null vectors.
  const CMat3& h = form_siegel();
  for (int i = 0; i < 50; ++i) {
    CVec3 q = standard_lift(random_point());
    CHECK(std::abs(hermitian_product(q, q, h)) < 1e-12);
  }
}

TEST_CASE("from_lift inverts the standard lift") {
  LiftedPoint inf = from_lift({1.0, 0.0, 0.0});
  CHECK(inf.at_infinity);
  LiftedPoint o = from_lift({0.0, 0.0, 5.0});
  CHECK_FALSE(o.at_infinity);
  CHECK(std::abs(o.p.z) < 1e-15);
  CHECK(o.p.t == doctest::Approx(0.0));

  const double s3 = std::sqrt(3.0);
  LiftedPoint p2 = from_lift({cplx(-0.5, -s3 / 2.0), cplx(-0.5, s3 / 2.0), 1.0});
  CHECK(std::abs(p2.p.z - cplx(-0.5, s3 / 2.0)) < 1e-14);
  CHECK(p2.p.t == doctest::Approx(-s3).epsilon(1e-14));
  CHECK(p2.p.u == doctest::Approx(0.0));

  for (int i = 0; i < 100; ++i) {
    HeisenbergPoint q = random_point();
    LiftedPoint back = from_lift(standard_lift(q) * cplx(0.4, -2.2));
    CHECK(std::abs(back.p.z - q.z) < 1e-12);
    CHECK(back.p.t == doctest::Approx(q.t).epsilon(1e-10));
  }

  // A positive vector is rejected.
  CHECK_THROWS_AS(from_lift(CVec3{1.0, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("cygan distance basics") {
  CHECK(cygan_distance(HeisenbergPoint{}, HeisenbergPoint{1.0, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Origin to (0,0,u) is u^{1/2}.
  CHECK(cygan_distance(HoroPoint{}, HoroPoint{0.0, 0.0, 3.7}) ==
        doctest::Approx(std::sqrt(3.7)).epsilon(1e-13));

  CHECK_THROWS_AS(cygan_distance(BoundaryPoint::infinity(), BoundaryPoint::finite(0.0, 0.0)),
                  std::domain_error);
}

TEST_CASE("cygan distance agrees with the coordinate expansion on the boundary") {
  for (int i = 0; i < 200; ++i) {
    HeisenbergPoint p = random_point(), q = random_point();
    double d = cygan_distance(p, q);
    // | |z-w|^2 - i(t - s + 2 Im(z conj(w))) |^{1/2}
    double re = std::norm(p.z - q.z);
    double im = p.t - q.t + 2.0 * std::imag(p.z * std::conj(q.z));
    double oracle = std::sqrt(std::hypot(re, im));
    CHECK(d == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(d == doctest::Approx(cygan_distance(q, p)).epsilon(1e-12));
  }
  HeisenbergPoint p = random_point();
  CHECK(cygan_distance(p, p) == doctest::Approx(0.0));
}

TEST_CASE("circle samples") {
  // Vertical C-circle keeps z constant.
  cplx z0(0.4, -1.0);
  auto vs = sample_ccircle({CCircleSpec::Kind::kVerticalLine, z0, 0.0, -2.0, 2.0}, 3);
  REQUIRE(vs.size() == 3);
  for (auto& p : vs) CHECK(std::abs(p.z - z0) < 1e-15);

  // The t = 0 circle of radius sqrt2 is polar to n3 = (1,0,1).
  auto c3 = sample_ccircle({CCircleSpec::Kind::kHorizontalCircle, 0.0, std::sqrt(2.0), 0, 0}, 16);
  const CMat3& h = form_siegel();
  CVec3 n3{1.0, 0.0, 1.0};
  for (auto& p : c3)
    CHECK(std::abs(hermitian_product(standard_lift(p), n3, h)) < 1e-12);

  // x-axis R-circle endpoints.
  auto xs = sample_rcircle({RCircleSpec::Kind::kXAxis, -1.0, 1.0}, 2);
  CHECK(std::abs(xs.front().z - cplx(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(xs.back().z - cplx(1.0, 0.0)) < 1e-15);

  // The T-invariant line at x = 0 passes through [i sqrt3/2, 0].
  auto ls = sample_rcircle({RCircleSpec::Kind::kTInvariantLine, 0.0, 1.0}, 2);
  CHECK(std::abs(ls.front().z - cplx(0.0, std::sqrt(3.0) / 2.0)) < 1e-15);
  CHECK(ls.front().t == doctest::Approx(0.0));

  CHECK_THROWS_AS(sample_ccircle({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_rcircle({}, 1), std::invalid_argument);
}
