#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chyp/triangle_group.hpp"

using namespace chyp;

namespace {

const double kS3 = std::sqrt(3.0);

Word word_of(const char* s) {
  // Compact notation: 's' = S, 'z' = S^-1, 't' = T, 'y' = T^-1.
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

}  // namespace

TEST_CASE("word helpers") {
  Word w = word_of("szty");
  CHECK(reduce_word(w).empty());
  CHECK(word_string(word_of("sy")) == "S T^-1");
  CHECK(word_string(inverse_word(word_of("sy"))) == "T S^-1");
  CHECK(word_string({}) == "1");
}

TEST_CASE("complex involutions match the closed forms of the mirrors") {
  double theta = 0.9;
  cplx eit(std::cos(theta), std::sin(theta));

  GroupElement i1 = complex_involution({eit, 1.0, 0.0});
  CMat3 expect1;
  expect1(0, 0) = -1.0; expect1(0, 1) = 2.0 * eit; expect1(0, 2) = 2.0;
  expect1(1, 1) = 1.0;  expect1(1, 2) = 2.0 * std::conj(eit);
  expect1(2, 2) = -1.0;
  CHECK((i1.m - expect1).max_abs() < 1e-13);

  GroupElement i2 = complex_involution({-std::conj(eit), 1.0, 0.0});
  CMat3 expect2;
  expect2(0, 0) = -1.0; expect2(0, 1) = -2.0 * std::conj(eit); expect2(0, 2) = 2.0;
  expect2(1, 1) = 1.0;  expect2(1, 2) = -2.0 * eit;
  expect2(2, 2) = -1.0;
  CHECK((i2.m - expect2).max_abs() < 1e-13);

  GroupElement i3 = complex_involution({1.0, 0.0, 1.0});
  CMat3 expect3;
  expect3(0, 2) = 1.0; expect3(1, 1) = -1.0; expect3(2, 0) = 1.0;
  CHECK((i3.m - expect3).max_abs() < 1e-13);

  // Squares are projectively the identity, the polar vector is fixed.
  for (const GroupElement* g : {&i1, &i2, &i3})
    CHECK(projective_compare(g->m * g->m, CMat3::identity(), 1e-12).equal);
  CHECK(projective_compare(i3.m * CVec3{1.0, 0.0, 1.0}, CVec3{1.0, 0.0, 1.0}, 1e-12).equal);

  CHECK_THROWS_AS(complex_involution(CVec3{1.0, 0.0, 0.0}), std::domain_error);  // null
}

TEST_CASE("heisenberg translation moves the origin and fixes infinity") {
  GroupElement tr = heisenberg_translation(cplx(1.0, 0.0), 2.0);
  BoundaryPoint img = apply(tr, BoundaryPoint::finite(0.0, 0.0));
  CHECK(std::abs(img.p.z - cplx(1.0, 0.0)) < 1e-14);
  CHECK(img.p.t == doctest::Approx(2.0));
  CHECK(apply(tr, BoundaryPoint::infinity()).at_infinity);

  GroupElement id = heisenberg_translation(0.0, 0.0);
  CHECK((id.m - CMat3::identity()).max_abs() < 1e-15);

  // T equals the translation by [4 cos th, 8 sin 2th].
  double theta = kPi / 3.0;
  TriangleGroup tg = build_triangle_group(theta);
  GroupElement expect = heisenberg_translation(4.0 * std::cos(theta), 8.0 * std::sin(2.0 * theta));
  CHECK(projective_compare(tg.T.m, expect.m, 1e-12).equal);
}

TEST_CASE("classification by trace and eigenvalues") {
  TriangleGroup tg0 = build_triangle_group(0.0);
  TriangleGroup tg3 = build_triangle_group(kPi / 3.0);
  TriangleGroup tg4 = build_triangle_group(0.4);

  // I1 I3 I2 I3 has trace 7 + 8 cos 2 theta.
  auto w1323 = [](const TriangleGroup& tg) {
    return GroupElement{su_normalize(tg.I1.m * tg.I3.m * tg.I2.m * tg.I3.m), {}};
  };
  GroupElement loxo = w1323(tg0);
  CHECK(su_normalize(loxo.m).trace().real() == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(classify(loxo).type == IsometryType::kLoxodromic);

  GroupElement para = w1323(tg3);
  IsometryClass pc = classify(para);
  CHECK(pc.type == IsometryType::kParabolic);
  CHECK(pc.unipotent);

  GroupElement s = tg4.S;
  IsometryClass sc = classify(s);
  CHECK(sc.type == IsometryType::kElliptic);
  CHECK(sc.order == 4);

  IsometryClass tc = classify(tg4.T);
  CHECK(tc.type == IsometryType::kParabolic);
  CHECK(tc.unipotent);

  CHECK(classify(GroupElement{CMat3::identity(), {}}).type == IsometryType::kIdentity);

  // S^2 is elliptic of order 2.
  GroupElement s2 = evaluate(tg4, word_of("ss"));
  IsometryClass s2c = classify(s2);
  CHECK(s2c.type == IsometryType::kElliptic);
  CHECK(s2c.order == 2);

  // Non-unitary input is rejected.
  CMat3 bad = CMat3::diagonal(2.0, 1.0, 1.0);
  CHECK_THROWS_AS(classify(GroupElement{bad, {}}), std::domain_error);
}

TEST_CASE("classification over a theta sweep") {
  for (int i = 0; i <= 50; ++i) {
    double theta = (kPi / 3.0) * i / 50.0;
    TriangleGroup tg = build_triangle_group(theta);
    CHECK(classify(tg.S).type == IsometryType::kElliptic);
    CHECK(classify(tg.S).order == 4);
    CHECK(classify(tg.T).type == IsometryType::kParabolic);
    GroupElement g{su_normalize(tg.I1.m * tg.I3.m * tg.I2.m * tg.I3.m), {}};
    IsometryClass c = classify(g);
    if (theta < kPi / 3.0 - 1e-6)
      CHECK(c.type == IsometryType::kLoxodromic);
    else
      CHECK(c.type == IsometryType::kParabolic);
  }
  // Past the parabolic value the product turns elliptic.
  TriangleGroup tg = build_triangle_group(1.2);
  GroupElement g{su_normalize(tg.I1.m * tg.I3.m * tg.I2.m * tg.I3.m), {}};
  CHECK(classify(g).type == IsometryType::kElliptic);
}

TEST_CASE("fixed boundary points") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);

  // T fixes the point at infinity.
  auto tf = fixed_boundary_points(tg.T);
  REQUIRE(tf.size() == 1);
  CHECK(tf[0].at_infinity);

  // T^-1 S^2 fixes p2 = [e^{i 2pi/3}, -sqrt3].
  auto p2 = fixed_boundary_points(evaluate(tg, word_of("yss")));
  REQUIRE(p2.size() == 1);
  CHECK_FALSE(p2[0].at_infinity);
  CHECK(std::abs(p2[0].p.z - cplx(-0.5, kS3 / 2.0)) < 1e-10);
  CHECK(p2[0].p.t == doctest::Approx(-kS3).epsilon(1e-10));

  // S T^-1 S fixes q3 = [(1+i sqrt3)/2, sqrt3].
  auto q3 = fixed_boundary_points(evaluate(tg, word_of("sys")));
  REQUIRE(q3.size() == 1);
  CHECK(std::abs(q3[0].p.z - cplx(0.5, kS3 / 2.0)) < 1e-10);
  CHECK(q3[0].p.t == doctest::Approx(kS3).epsilon(1e-10));

  // The fixed point is genuinely fixed.
  for (const char* w : {"yss", "sys", "ssy", "ysyst"}) {
    GroupElement g = evaluate(tg, word_of(w));
    BoundaryPoint f = fixed_boundary_points(g).at(0);
    BoundaryPoint img = apply(g, f);
    REQUIRE_FALSE(img.at_infinity);
    CHECK(coord_distance(img, f) < 1e-9);
  }

  // A loxodromic has two fixed points, both genuinely fixed.
  TriangleGroup tg0 = build_triangle_group(0.3);
  GroupElement loxo{su_normalize(tg0.I1.m * tg0.I3.m * tg0.I2.m * tg0.I3.m), {}};
  auto fixed = fixed_boundary_points(loxo);
  REQUIRE(fixed.size() == 2);
  for (const auto& f : fixed) {
    BoundaryPoint img = apply(loxo, f);
    CHECK(coord_distance(img, f) < 1e-8);
  }

  // Elliptic input is rejected.
  CHECK_THROWS_AS(fixed_boundary_points(tg.S), std::domain_error);
}
