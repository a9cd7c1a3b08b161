#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chyp/ford.hpp"

using namespace chyp;

namespace {

const double kS3 = std::sqrt(3.0);

TraceOptions coarse() {
  TraceOptions opt;
  opt.grid_alpha = 160;
  opt.grid_beta = 160;
  opt.w_scan = 12;
  return opt;
}

void dump_failures(const FordReport& rep) {
  for (const ClaimRecord& c : rep.claims)
    if (!c.pass)
      MESSAGE("failed claim: ", c.id, " kind=", c.kind, " margin=", c.margin, " note=", c.note);
}

}  // namespace

TEST_CASE("ford margin") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);

  CHECK_THROWS_AS(ford_margin(HoroPoint{}, tg, 1), std::domain_error);

  // The center of P0 sits at depth -2.
  CHECK(ford_margin(HoroPoint{}, tg, 5).margin == doctest::Approx(-2.0));

  // High above the origin the point clears every sphere.
  CHECK(ford_margin(HoroPoint{0.0, 0.0, 10.0}, tg, 5).margin > 0.0);

  // The T-invariant line stays inside the spheres for a full period.
  for (int i = 0; i <= 40; ++i) {
    double x = -0.5 + 2.0 * i / 40.0;
    HoroPoint p{cplx(x, kS3 / 2.0), kS3 * x, 0.0};
    CHECK(ford_margin(p, tg, 5).margin < 0.0);
  }
}

TEST_CASE("ford margin window sufficiency and T-equivariance") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  GroupElement t = tg.T;
  for (int ix = 0; ix <= 4; ++ix) {
    for (int iy = 0; iy <= 4; ++iy) {
      for (double u : {0.0, 1.0, 10.0}) {
        double x = -1.5 + 2.0 * ix / 4.0;
        double y = -6.0 + 12.0 * iy / 4.0;
        HoroPoint p{cplx(x, y), 3.0 * y, u};
        FordMargin m5 = ford_margin(p, tg, 5);
        FordMargin m8 = ford_margin(p, tg, 8);
        CHECK(std::abs(m5.margin - m8.margin) < 1e-12);
        CHECK(std::abs(m5.argmin.k) <= 2);
        // D is invariant under T: margins agree after translating.
        HoroPoint q = apply(t, p);
        CHECK(ford_margin(q, tg, 8).margin == doctest::Approx(m5.margin).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("tau symmetry transports margins") {
  TriangleGroup tg = build_triangle_group(0.8);
  // tau is a Cygan isometry matching sphere families P_k -> P_-k,
  // M_k -> M_-k-1, S_k -> D_-k.
  auto tau_id = [](const SphereId& id) -> SphereId {
    switch (id.family) {
      case SphereFamily::kPlus: return {SphereFamily::kPlus, -id.k};
      case SphereFamily::kMinus: return {SphereFamily::kMinus, -id.k - 1};
      case SphereFamily::kStar: return {SphereFamily::kDiamond, -id.k};
      case SphereFamily::kDiamond: return {SphereFamily::kStar, -id.k};
    }
    return id;
  };
  for (int i = 0; i < 20; ++i) {
    HoroPoint p{cplx(0.3 * i - 2.0, 0.17 * i - 1.5), 0.41 * i - 4.0, 0.05 * i};
    for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                           SphereFamily::kDiamond}) {
      for (int k = -2; k <= 2; ++k) {
        SphereId id{f, k};
        double lhs = side_of(p, sphere_of(id, tg));
        double rhs = side_of(tau_image(p), sphere_of(tau_id(id), tg));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("sphere table report") {
  TriangleGroup tg = build_triangle_group(0.77);
  FordReport rep = verify_sphere_table(tg, -3, 3);
  dump_failures(rep);
  CHECK(rep.all_pass());
  CHECK(rep.claims.size() == 4 * 7);
}

TEST_CASE("pairwise suite passes at three parameters") {
  for (double theta : {0.0, 0.5, kPi / 3.0}) {
    TriangleGroup tg = build_triangle_group(theta);
    FordReport rep = verify_pairwise(tg, 3, coarse());
    dump_failures(rep);
    CHECK(rep.all_pass());
    // Containment claims carry traced samples at the overlapping parameters.
    if (theta > 0.4) {
      int samples = 0;
      for (const ClaimRecord& c : rep.claims)
        if (c.kind == "contained") samples += c.samples;
      CHECK(samples > 1000);
    }
  }
}

TEST_CASE("pairwise disjointness margins match the distance formulas") {
  double theta = 0.7;
  TriangleGroup tg = build_triangle_group(theta);
  // Plus pair distance 4 sqrt(|k| cos th) |k cos th - i sin th|^{1/2}.
  IsometricSphere p0 = sphere_of({SphereFamily::kPlus, 0}, tg);
  for (int k = 1; k <= 3; ++k) {
    IsometricSphere pk = sphere_of({SphereFamily::kPlus, k}, tg);
    double d = cygan_distance(p0.center, pk.center);
    double expect = 4.0 * std::sqrt(k * std::cos(theta)) *
                    std::sqrt(std::abs(cplx(k * std::cos(theta), -std::sin(theta))));
    CHECK(d == doctest::Approx(expect).epsilon(1e-12));
  }
  // Plus-minus distance 2 sqrt(sin^2 + (2k+1)^2 cos^2).
  for (int k : {-3, -2, 1, 2}) {
    IsometricSphere mk = sphere_of({SphereFamily::kMinus, k}, tg);
    double d = cygan_distance(p0.center, mk.center);
    double s = std::sin(theta), c0 = std::cos(theta);
    CHECK(d == doctest::Approx(2.0 * std::sqrt(s * s + std::pow(2 * k + 1, 2) * c0 * c0))
                   .epsilon(1e-12));
  }
  // Star pair distance |4k cos th|.
  IsometricSphere s0 = sphere_of({SphereFamily::kStar, 0}, tg);
  for (int k : {-2, 1}) {
    IsometricSphere sk = sphere_of({SphereFamily::kStar, k}, tg);
    CHECK(cygan_distance(s0.center, sk.center) ==
          doctest::Approx(std::abs(4.0 * k * std::cos(theta))).epsilon(1e-12));
  }
  // Star-diamond distance 2 sqrt(cos) |(2k-1)^2 cos - i sin|^{1/2}.
  for (int k : {-1, 0, 1, 2}) {
    IsometricSphere dk = sphere_of({SphereFamily::kDiamond, k}, tg);
    double expect = 2.0 * std::sqrt(std::cos(theta)) *
                    std::sqrt(std::abs(cplx(std::pow(2 * k - 1, 2) * std::cos(theta),
                                            -std::sin(theta))));
    CHECK(cygan_distance(s0.center, dk.center) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("triple scan") {
  SUBCASE("empty for theta below the parabolic value") {
    for (double theta : {0.0, 0.6}) {
      TriangleGroup tg = build_triangle_group(theta);
      TripleScan scan = triple_scan(tg);
      CHECK(scan.min_value > 1e-3);
      FordReport rep = verify_triple(tg);
      dump_failures(rep);
      CHECK(rep.all_pass());
    }
  }
  SUBCASE("localizes the cusp at pi/3") {
    TriangleGroup tg = build_triangle_group(kPi / 3.0);
    TripleScan scan = triple_scan(tg);
    CHECK(scan.min_value < 1e-9);
    CHECK(std::abs(scan.argmin_point.z - cplx(-0.5, kS3 / 2.0)) < 1e-6);
    CHECK(scan.argmin_point.t == doctest::Approx(-kS3).epsilon(1e-6));
    FordReport rep = verify_triple(tg);
    dump_failures(rep);
    CHECK(rep.all_pass());
  }
  SUBCASE("rejects theta beyond pi/3") {
    CHECK_THROWS_AS(verify_triple(build_triangle_group(1.2)), std::domain_error);
  }
}

TEST_CASE("side pairing table and verification") {
  auto table = side_pairing_table(2);
  CHECK(table.size() == 15);
  for (const SidePairing& sp : table) {
    if (sp.side.family == SphereFamily::kPlus)
      CHECK(sp.image.family == SphereFamily::kMinus);
    else
      CHECK(sp.image == sp.side);
  }

  for (double theta : {0.5, kPi / 3.0}) {
    TriangleGroup tg = build_triangle_group(theta);
    FordReport rep = verify_side_pairings(tg, coarse(), 100);
    dump_failures(rep);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("cycle check") {
  for (double theta : {0.5, kPi / 3.0}) {
    TriangleGroup tg = build_triangle_group(theta);
    FordReport rep = cycle_check(tg, coarse(), 100);
    dump_failures(rep);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("horoball consistency at pi/3") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  FordReport rep = horoball_consistency(tg);
  dump_failures(rep);
  CHECK(rep.all_pass());

  CHECK_THROWS_AS(horoball_consistency(build_triangle_group(0.5)), std::domain_error);
}

TEST_CASE("report json") {
  TriangleGroup tg = build_triangle_group(kPi / 3.0);
  FordReport rep = verify_sphere_table(tg, -1, 1);
  std::string json = report_json(rep);
  CHECK(json.find("\"theta\"") != std::string::npos);
  CHECK(json.find("\"claims\"") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
}
