#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chyp/spheres.hpp"

using namespace chyp;

namespace {

const double kS3 = std::sqrt(3.0);

Word word_of(const char* s) {
  Word w;
  for (const char* p = s; *p; ++p) {
    switch (*p) {
      case 's': w.push_back(Letter::kS); break;
      case 'z': w.push_back(Letter::kSInv); break;
      case 't': w.push_back(Letter::kT); break;
      case 'y': w.push_back(Letter::kTInv); break;
      default: break;
    }
  }
  return w;
}

TraceOptions coarse() {
  TraceOptions opt;
  opt.grid_alpha = 160;
  opt.grid_beta = 160;
  opt.w_scan = 12;
  return opt;
}

}  // namespace

TEST_CASE("isometric sphere of a group element") {
  TriangleGroup tg = build_triangle_group(0.9);

  IsometricSphere s = isometric_sphere(tg.S);
  CHECK(std::abs(s.center.z) < 1e-13);
  CHECK(s.center.t == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(s.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

  IsometricSphere s2 = isometric_sphere(evaluate(tg, word_of("ss")));
  CHECK(std::abs(s2.center.z - cplx(std::cos(0.9), std::sin(0.9))) < 1e-12);
  CHECK(s2.center.t == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s2.radius == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(isometric_sphere(tg.T), std::domain_error);
}

TEST_CASE("unipotent stabilizer does not change the sphere") {
  TriangleGroup tg = build_triangle_group(0.6);
  IsometricSphere base = isometric_sphere(tg.S);
  for (int m = -2; m <= 2; ++m) {
    Word w = word_pow(m >= 0 ? Letter::kT : Letter::kTInv, std::abs(m));
    w.push_back(Letter::kS);
    IsometricSphere s = isometric_sphere(evaluate(tg, w));
    CHECK(coord_distance(s.center, base.center) < 1e-12);
    CHECK(s.radius == doctest::Approx(base.radius).epsilon(1e-12));
  }
}

TEST_CASE("closed-form sphere table matches the defining words") {
  for (double theta : {0.0, 0.31, 0.62, kPi / 3.0}) {
    TriangleGroup tg = build_triangle_group(theta);
    for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                           SphereFamily::kDiamond}) {
      for (int k = -3; k <= 3; ++k) {
        SphereId id{f, k};
        IsometricSphere a = sphere_of(id, tg);
        IsometricSphere b = isometric_sphere(evaluate(tg, sphere_word(id)));
        CHECK(coord_distance(a.center, b.center) < 1e-9);
        CHECK(std::abs(a.radius - b.radius) < 1e-9);
      }
    }
  }
}

TEST_CASE("sphere table spot values") {
  double theta = kPi / 3.0;
  TriangleGroup tg = build_triangle_group(theta);

  IsometricSphere m0 = sphere_of({SphereFamily::kMinus, 0}, tg);
  CHECK(std::abs(m0.center.z - 2.0 * cplx(0.5, kS3 / 2.0)) < 1e-14);
  CHECK(m0.center.t == doctest::Approx(0.0));
  CHECK(m0.radius == doctest::Approx(std::sqrt(2.0)));

  IsometricSphere d1 = sphere_of({SphereFamily::kDiamond, 1}, tg);
  CHECK(std::abs(d1.center.z - cplx(1.5, kS3 / 2.0)) < 1e-14);
  CHECK(d1.center.t == doctest::Approx(4.0 * std::sin(2.0 * theta)).epsilon(1e-13));
  CHECK(d1.radius == doctest::Approx(1.0));

  // Plus-family centers are the T^k images of the origin.
  for (int k = -3; k <= 3; ++k) {
    IsometricSphere pk = sphere_of({SphereFamily::kPlus, k}, tg);
    BoundaryPoint img = BoundaryPoint::finite(0.0, 0.0);
    GroupElement tk = evaluate(tg, word_conj_by_t({}, k));
    // word_conj_by_t({}, k) collapses, build T^k explicitly
    Word w = word_pow(k >= 0 ? Letter::kT : Letter::kTInv, std::abs(k));
    tk = evaluate(tg, w);
    img = apply(tk, img);
    CHECK(coord_distance(img.p, pk.center) < 1e-11);
  }
}

TEST_CASE("side_of margins") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  IsometricSphere p0 = sphere_of({SphereFamily::kPlus, 0}, tg);
  CHECK(side_of(to_horo(p0.center), p0) == doctest::Approx(-2.0));
  CHECK(side_of(HoroPoint{cplx(100.0, 0.0), 0.0, 0.0}, p0) > 0.0);

  // p2 lies on the star sphere at k = 0.
  HoroPoint p2{cplx(-0.5, kS3 / 2.0), -kS3, 0.0};
  CHECK(std::abs(side_of(p2, sphere_of({SphereFamily::kStar, 0}, tg))) < 1e-9);
  CHECK_THROWS_AS(side_of(BoundaryPoint::infinity(), p0), std::domain_error);
}

TEST_CASE("geographic lift") {
  double theta = 0.45;
  const double r = std::sqrt(2.0);
  // q(0, theta, sqrt2/2) lifts to (-1, e^{i theta}, 1).
  CVec3 lift = geographic_lift({0.0, theta, std::sqrt(0.5)}, r);
  CHECK(std::abs(lift[0] + 1.0) < 1e-14);
  CHECK(std::abs(lift[1] - cplx(std::cos(theta), std::sin(theta))) < 1e-14);

  // q(-pi/3, pi/2, sqrt2/2) at theta = pi/3 is p2.
  LiftedPoint p = from_lift(geographic_lift({-kPi / 3.0, kPi / 2.0, std::sqrt(0.5)}, r));
  CHECK(std::abs(p.p.z - cplx(-0.5, kS3 / 2.0)) < 1e-13);
  CHECK(p.p.t == doctest::Approx(-kS3).epsilon(1e-13));
  CHECK(p.p.u == doctest::Approx(0.0));

  // Boundary exactly when |w| = sqrt(cos alpha).
  const CMat3& h = form_siegel();
  for (double alpha : {-1.1, -0.3, 0.0, 0.9}) {
    CVec3 b = geographic_lift({alpha, 1.1, std::sqrt(std::cos(alpha))}, r);
    CHECK(std::abs(hermitian_product(b, b, h)) < 1e-12);
    // Interior points satisfy the quartic sphere equation.
    GeographicCoord gc{alpha, 1.1, 0.4 * std::sqrt(std::cos(alpha))};
    HoroPoint q = geographic_point(gc, r);
    double quart = std::pow(std::norm(q.z) + q.u, 2) + q.t * q.t;
    CHECK(quart == doctest::Approx(r * r * r * r).epsilon(1e-12));
  }

  CHECK_THROWS_AS(geographic_lift({0.0, 0.0, 1.2}, r), std::domain_error);

  // Recentring: points of a translated sphere still satisfy side_of ~ 0.
  TriangleGroup tg = build_triangle_group(theta);
  IsometricSphere d0 = sphere_of({SphereFamily::kDiamond, 0}, tg);
  HoroPoint q = geographic_point({0.2, 0.9, 0.5}, d0);
  CHECK(std::abs(side_of(q, d0)) < 1e-12);
}

TEST_CASE("f functions") {
  double theta = kPi / 3.0;
  TriangleGroup tg = build_triangle_group(theta);

  // f_star(alpha, alpha/2 + theta, sqrt2/2) = 1 - cos(alpha).
  for (double alpha : {-1.2, -0.4, 0.0, 0.6, 1.3}) {
    double f = f_eval(SphereFunction::kStar0, theta, {alpha, alpha / 2.0 + theta, std::sqrt(0.5)});
    CHECK(f == doctest::Approx(1.0 - std::cos(alpha)).epsilon(1e-12));
  }

  // p2's geographic coordinates kill f_minusminus1.
  CHECK(std::abs(f_eval(SphereFunction::kMinusMinus1, theta,
                        {-kPi / 3.0, kPi / 2.0, std::sqrt(0.5)})) < 1e-12);
  CHECK(std::abs(f_eval(SphereFunction::kStar0, theta,
                        {-kPi / 3.0, kPi / 2.0, std::sqrt(0.5)})) < 1e-12);

  // Sign of each f agrees with the lift-based margin at random chart points.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> da(-kPi / 2.0, kPi / 2.0), db(0.0, kPi), dw(-1.0, 1.0);
  IsometricSphere p0 = sphere_of({SphereFamily::kPlus, 0}, tg);
  IsometricSphere star0 = sphere_of({SphereFamily::kStar, 0}, tg);
  IsometricSphere m0 = sphere_of({SphereFamily::kMinus, 0}, tg);
  IsometricSphere mm1 = sphere_of({SphereFamily::kMinus, -1}, tg);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    double alpha = da(rng);
    GeographicCoord gc{alpha, db(rng), dw(rng) * std::sqrt(std::cos(alpha))};
    HoroPoint q = geographic_point(gc, p0);
    REQUIRE(std::abs(side_of(q, p0)) < 1e-10);
    struct Pair {
      SphereFunction f;
      const IsometricSphere* s;
    } pairs[] = {{SphereFunction::kStar0, &star0},
                 {SphereFunction::kMinus0, &m0},
                 {SphereFunction::kMinusMinus1, &mm1}};
    for (const auto& pr : pairs) {
      double f = f_eval(pr.f, theta, gc);
      double s = side_of(q, *pr.s);
      if (std::abs(f) > 1e-8) {
        CHECK((f > 0) == (s > 0));
        ++checked;
      }
    }
  }
  CHECK(checked > 25000);
}

TEST_CASE("giraud trace finds the expected intersections") {
  TraceOptions opt = coarse();

  SUBCASE("adjacent plus spheres at pi/3 are disjoint despite touching distance") {
    TriangleGroup tg = build_triangle_group(kPi / 3.0);
    GiraudTrace tr = giraud_trace(sphere_of({SphereFamily::kPlus, 0}, tg),
                                  sphere_of({SphereFamily::kPlus, 1}, tg), opt);
    CHECK(tr.points.empty());
    CHECK(tr.min_abs_other > 0.0);
  }

  SUBCASE("plus and minus at the same index intersect in a connected set") {
    TriangleGroup tg = build_triangle_group(0.5);
    IsometricSphere p0 = sphere_of({SphereFamily::kPlus, 0}, tg);
    IsometricSphere m0 = sphere_of({SphereFamily::kMinus, 0}, tg);
    GiraudTrace tr = giraud_trace(p0, m0, opt);
    CHECK(tr.points.size() > 100);
    CHECK(tr.connected);
    for (const TracedPoint& tp : tr.points) {
      CHECK(tp.base_residual < 1e-10);
      CHECK(tp.other_residual < 1e-10);
    }
    // Contains the fixed point of S at q(0, theta, sqrt2/2).
    HoroPoint fix = geographic_point({0.0, 0.5, std::sqrt(0.5)}, p0);
    double nearest = 1e9;
    for (const TracedPoint& tp : tr.points)
      nearest = std::min(nearest, coord_distance(tp.p, fix));
    CHECK(nearest < 0.05);
  }

  SUBCASE("star and diamond intersect inside the plus sphere") {
    for (double theta : {0.3, 1.0}) {
      TriangleGroup tg = build_triangle_group(theta);
      IsometricSphere s0 = sphere_of({SphereFamily::kStar, 0}, tg);
      IsometricSphere d0 = sphere_of({SphereFamily::kDiamond, 0}, tg);
      IsometricSphere p0 = sphere_of({SphereFamily::kPlus, 0}, tg);
      GiraudTrace tr = giraud_trace(s0, d0, opt);
      CHECK_FALSE(tr.points.empty());
      for (const TracedPoint& tp : tr.points) {
        CHECK(side_of(tp.p, p0) < 0.0);
        // Equivalent quartic bound (|z|^2+u)^2 + t^2 < 4.
        CHECK(std::pow(std::norm(tp.p.z) + tp.p.u, 2) + tp.p.t * tp.p.t < 4.0);
      }
    }
  }

  SUBCASE("an explicit point of star ^ minus(-1) at pi/3 is interior to P0") {
    // Solve the two sphere equations with phase parameters (pi/6, 0):
    //   z = (2 e^{i a} - e^{i b} - 3) / (4 e^{i th} + 2 e^{-i th}),
    //   u = cos(b) - |z e^{-i th} - 1|^2,  t = -sin(b) - 2 Im(z e^{-i th}).
    TriangleGroup tg = build_triangle_group(kPi / 3.0);
    const double th = kPi / 3.0, a = kPi / 6.0, b = 0.0;
    const cplx eith(std::cos(th), std::sin(th));
    cplx z = (2.0 * cplx(std::cos(a), std::sin(a)) - cplx(std::cos(b), std::sin(b)) - 3.0) /
             (4.0 * eith + 2.0 * std::conj(eith));
    double u = std::cos(b) - std::norm(z * std::conj(eith) - 1.0);
    double t = -std::sin(b) - 2.0 * std::imag(z * std::conj(eith));
    HoroPoint p0{z, t, u};
    REQUIRE(u > 0.0);
    CHECK(std::abs(side_of(p0, sphere_of({SphereFamily::kStar, 0}, tg))) < 1e-12);
    CHECK(std::abs(side_of(p0, sphere_of({SphereFamily::kMinus, -1}, tg))) < 1e-12);
    CHECK(side_of(p0, sphere_of({SphereFamily::kPlus, 0}, tg)) < 0.0);
    // Equivalently, inside the quartic bound of the plus sphere.
    CHECK(std::pow(std::norm(p0.z) + p0.u, 2) + p0.t * p0.t < 4.0);
  }
}

TEST_CASE("triple curves") {
  for (double theta : {0.0, 0.5, kPi / 3.0}) {
    TriangleGroup tg = build_triangle_group(theta);
    TripleCurves tc = triple_curves(tg, 65);

    // Every sample satisfies both defining equations.
    for (const auto* params : {&tc.arc_l1_params, &tc.arc_c1_params, &tc.arc_c2_params}) {
      for (const GeographicCoord& gc : *params) {
        CHECK(std::abs(f_eval(SphereFunction::kMinus0, theta, gc)) < 1e-10);
        CHECK(std::abs(f_eval(SphereFunction::kStar0, theta, gc)) < 1e-10);
      }
    }

    // S fixes the crossing point.
    HoroPoint fixed = apply(tg.S, tc.center);
    CHECK(coord_distance(fixed, tc.center) < 1e-10);

    // S cyclically permutes the endpoint lifts in the stated order.
    for (size_t i = 0; i < 4; ++i) {
      CVec3 img = tg.S.m * tc.endpoint_lifts[i];
      CHECK(projective_compare(img, tc.endpoint_lifts[(i + 1) % 4], 1e-9).equal);
    }

    // Endpoints against the printed lifts (second coordinate e^{i theta} factors).
    cplx eit(std::cos(theta), std::sin(theta));
    CVec3 e0{-1.0, cplx(4.0 / 3.0, std::sqrt(2.0) / 3.0) * eit, 1.0};
    CHECK(projective_compare(tc.endpoint_lifts[0], e0, 1e-10).equal);
    CVec3 e1{cplx(-1.0 / 3.0, 2.0 * std::sqrt(2.0) / 3.0),
             cplx(2.0 / 3.0, -std::sqrt(2.0) / 3.0) * eit, 1.0};
    CHECK(projective_compare(tc.endpoint_lifts[1], e1, 1e-10).equal);
    CVec3 e2{-1.0, cplx(4.0 / 3.0, -std::sqrt(2.0) / 3.0) * eit, 1.0};
    CHECK(projective_compare(tc.endpoint_lifts[2], e2, 1e-10).equal);
    CVec3 e3{cplx(-1.0 / 3.0, -2.0 * std::sqrt(2.0) / 3.0),
             cplx(2.0 / 3.0, std::sqrt(2.0) / 3.0) * eit, 1.0};
    CHECK(projective_compare(tc.endpoint_lifts[3], e3, 1e-10).equal);
  }
}

TEST_CASE("tangency table at pi/3") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  auto tangencies = tangency_points(tg, 2);
  CHECK_FALSE(tangencies.empty());
  for (const Tangency& t : tangencies) {
    HoroPoint pt = to_horo(t.point);
    CHECK(std::abs(side_of(pt, sphere_of(t.a, tg))) < 1e-9);
    CHECK(std::abs(side_of(pt, sphere_of(t.b, tg))) < 1e-9);
    HoroPoint img = apply(evaluate(tg, t.word), pt);
    CHECK(coord_distance(img, pt) < 1e-9);
  }

  // Star spheres 0 and -1 touch at p2, the fixed point of T^-1 S^2.
  bool found = false;
  for (const Tangency& t : tangencies) {
    if (t.a == SphereId{SphereFamily::kStar, -1} && t.b == SphereId{SphereFamily::kStar, 0}) {
      found = true;
      CHECK(std::abs(t.point.p.z - cplx(-0.5, kS3 / 2.0)) < 1e-10);
      CHECK(t.point.p.t == doctest::Approx(-kS3).epsilon(1e-10));
    }
    if (t.a == SphereId{SphereFamily::kStar, 0} && t.b == SphereId{SphereFamily::kStar, -1}) {
      found = true;
      CHECK(std::abs(t.point.p.z - cplx(-0.5, kS3 / 2.0)) < 1e-10);
    }
  }
  CHECK(found);

  TriangleGroup other = build_triangle_group(0.4);
  CHECK_THROWS_AS(tangency_points(other, 2), std::domain_error);
}
