#include "chyp/ford.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chyp {

bool FordReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.pass; });
}

int FordReport::failed() const {
  return static_cast<int>(
      std::count_if(claims.begin(), claims.end(), [](const ClaimRecord& c) { return !c.pass; }));
}

void FordReport::merge(const FordReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::string report_json(const FordReport& r) {
  nlohmann::json j;
  j["theta"] = r.theta;
  j["K"] = r.k_window;
  j["claims"] = nlohmann::json::array();
  for (const ClaimRecord& c : r.claims) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["kind"] = c.kind;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["margin"] = c.margin;
    jc["samples"] = c.samples;
    if (!c.note.empty()) jc["note"] = c.note;
    if (c.witness) {
      jc["witness"] = {{"x", c.witness->z.real()},
                       {"y", c.witness->z.imag()},
                       {"t", c.witness->t},
                       {"u", c.witness->u}};
    }
    j["claims"].push_back(jc);
  }
  j["summary"] = {{"total", r.claims.size()},
                  {"failed", r.failed()},
                  {"all_pass", r.all_pass()}};
  return j.dump(2);
}

FordMargin ford_margin(const HoroPoint& p, const TriangleGroup& tg, int K) {
  if (K < 2) throw std::domain_error("ford_margin: window K must be >= 2");
  FordMargin best{std::numeric_limits<double>::infinity(), {}};
  for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                         SphereFamily::kDiamond}) {
    for (int k = -K; k <= K; ++k) {
      SphereId id{f, k};
      double s = side_of(p, sphere_of(id, tg));
      if (s < best.margin) best = {s, id};
    }
  }
  return best;
}

FordReport verify_sphere_table(const TriangleGroup& tg, int k_min, int k_max, double tol) {
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = std::max(std::abs(k_min), std::abs(k_max));
  for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                         SphereFamily::kDiamond}) {
    for (int k = k_min; k <= k_max; ++k) {
      SphereId id{f, k};
      IsometricSphere closed = sphere_of(id, tg);
      IsometricSphere from_word = isometric_sphere(evaluate(tg, sphere_word(id)));
      double dc = coord_distance(closed.center, from_word.center);
      double dr = std::abs(closed.radius - from_word.radius);
      ClaimRecord c;
      c.id = "table " + to_string(id);
      c.kind = "table";
      c.margin = std::max(dc, dr);
      c.pass = c.margin < tol;
      rep.claims.push_back(c);
    }
  }
  return rep;
}

// ----------------------------------------------------------------------------
// Pairwise intersection suite
// ----------------------------------------------------------------------------

namespace {

enum class PairKind { kDisjoint, kRidge, kContained, kTangentAdjacent };

struct PairClaim {
  PairKind kind = PairKind::kDisjoint;
  SphereId container;  // kContained only
};

int family_rank(SphereFamily f) { return static_cast<int>(f); }

// Classification of an unordered sphere pair per the intersection trichotomy;
// a < b in (family, k) order.
PairClaim classify_pair(const SphereId& a, const SphereId& b) {
  using F = SphereFamily;
  const int m = b.k - a.k;
  auto pair_is = [&](F x, F y) { return a.family == x && b.family == y; };

  if (pair_is(F::kPlus, F::kPlus) || pair_is(F::kMinus, F::kMinus)) return {PairKind::kDisjoint, {}};
  if (pair_is(F::kPlus, F::kMinus))
    return {(m == 0 || m == -1) ? PairKind::kRidge : PairKind::kDisjoint, {}};
  if (pair_is(F::kPlus, F::kStar)) {
    if (m == 0) return {PairKind::kRidge, {}};
    if (m == -1) return {PairKind::kContained, {F::kMinus, a.k - 1}};
    return {PairKind::kDisjoint, {}};
  }
  if (pair_is(F::kPlus, F::kDiamond)) {
    if (m == 0) return {PairKind::kRidge, {}};
    if (m == 1) return {PairKind::kContained, {F::kMinus, a.k}};
    return {PairKind::kDisjoint, {}};
  }
  if (pair_is(F::kMinus, F::kStar)) {
    if (m == 0) return {PairKind::kRidge, {}};
    if (m == 1) return {PairKind::kContained, {F::kPlus, a.k + 1}};
    return {PairKind::kDisjoint, {}};
  }
  if (pair_is(F::kMinus, F::kDiamond)) {
    if (m == 0) return {PairKind::kContained, {F::kPlus, a.k}};
    if (m == 1) return {PairKind::kRidge, {}};
    return {PairKind::kDisjoint, {}};
  }
  if (pair_is(F::kStar, F::kStar) || pair_is(F::kDiamond, F::kDiamond))
    return {std::abs(m) == 1 ? PairKind::kTangentAdjacent : PairKind::kDisjoint, {}};
  if (pair_is(F::kStar, F::kDiamond)) {
    if (m == 0) return {PairKind::kContained, {F::kPlus, a.k}};
    if (m == 1) return {PairKind::kContained, {F::kMinus, a.k}};
    return {PairKind::kDisjoint, {}};
  }
  return {PairKind::kDisjoint, {}};
}

HoroPoint translate_point(const HeisenbergPoint& by, const HoroPoint& p) {
  HeisenbergPoint q = heisenberg_product(by, {p.z, p.t});
  return {q.z, q.t, p.u};
}

std::string pair_id(const SphereId& a, const SphereId& b) {
  return to_string(a) + " " + to_string(b);
}

}  // namespace

FordReport verify_pairwise(const TriangleGroup& tg, int K, const TraceOptions& opt) {
  if (tg.theta > kPi / 3.0 + 1e-12)
    throw std::domain_error("verify_pairwise: requires theta in [0, pi/3]");
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = K;

  std::vector<SphereId> ids;
  for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                         SphereFamily::kDiamond})
    for (int k = -K; k <= K; ++k) ids.push_back({f, k});

  std::map<std::string, IsometricSphere> spheres;
  for (const SphereId& id : ids) spheres.emplace(to_string(id), sphere_of(id, tg));
  auto sphere = [&](const SphereId& id) -> const IsometricSphere& {
    auto it = spheres.find(to_string(id));
    if (it == spheres.end())
      it = spheres.emplace(to_string(id), sphere_of(id, tg)).first;
    return it->second;
  };

  // Canonical traces, cached per (familyA, familyB, k-offset).
  std::map<std::string, GiraudTrace> cache;
  auto canonical_trace = [&](const SphereId& a, const SphereId& b) -> const GiraudTrace& {
    SphereId ca{a.family, 0}, cb{b.family, b.k - a.k};
    std::string key = pair_id(ca, cb);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, giraud_trace(sphere(ca), sphere(cb), opt)).first;
    return it->second;
  };

  // Predicted tangency/exception points at theta = pi/3.
  std::map<std::string, Tangency> tangencies;
  if (tg.parabolic_case) {
    for (const Tangency& t : tangency_points(tg, K + 1)) {
      SphereId a = t.a, b = t.b;
      if (family_rank(b.family) < family_rank(a.family) ||
          (a.family == b.family && b.k < a.k))
        std::swap(a, b);
      tangencies.emplace(pair_id(a, b), t);
    }
  }

  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      SphereId a = ids[i], b = ids[j];
      PairClaim pc = classify_pair(a, b);
      const IsometricSphere &sa = sphere(a), &sb = sphere(b);
      double dist = cygan_distance(sa.center, sb.center);
      double rsum = sa.radius + sb.radius;

      ClaimRecord c;
      c.id = pair_id(a, b);
      switch (pc.kind) {
        case PairKind::kDisjoint: {
          c.kind = "disjoint";
          c.margin = dist - rsum;
          if (c.margin >= 1e-9) {
            c.pass = true;
            c.note = "center distance";
          } else {
            const GiraudTrace& tr = canonical_trace(a, b);
            c.samples = static_cast<int>(tr.points.size());
            c.margin = tr.min_abs_other;
            c.pass = tr.points.empty();
            c.note = "sampled";
            if (!c.pass)
              c.witness = translate_point(sphere(SphereId{SphereFamily::kPlus, a.k}).center,
                                          tr.points.front().p);
          }
          break;
        }
        case PairKind::kRidge: {
          c.kind = "ridge";
          const GiraudTrace& tr = canonical_trace(a, b);
          c.samples = static_cast<int>(tr.points.size());
          c.margin = tr.min_abs_other;
          c.pass = !tr.points.empty() && tr.connected;
          std::ostringstream note;
          note << "components=" << tr.components;
          c.note = note.str();
          break;
        }
        case PairKind::kContained: {
          c.kind = "contained";
          c.id += " in " + to_string(pc.container);
          const GiraudTrace& tr = canonical_trace(a, b);
          SphereId cont_canonical{pc.container.family, pc.container.k - a.k};
          const IsometricSphere& sc = sphere(cont_canonical);
          int violations = 0;
          double max_side = -std::numeric_limits<double>::infinity();
          for (const TracedPoint& tp : tr.points) {
            double s = side_of(tp.p, sc);
            max_side = std::max(max_side, s);
            if (s > 1e-7) {
              ++violations;
              if (!c.witness) c.witness = tp.p;
            }
          }
          c.samples = static_cast<int>(tr.points.size());
          c.margin = tr.points.empty() ? dist - rsum : max_side;
          c.pass = violations == 0;
          c.note = tr.points.empty() ? "empty intersection" : "max side in container";
          break;
        }
        case PairKind::kTangentAdjacent: {
          if (!tg.parabolic_case) {
            c.kind = "disjoint";
            c.margin = dist - rsum;
            c.pass = c.margin >= 1e-9;
            c.note = "center distance";
          } else {
            c.kind = "tangent";
            const GiraudTrace& tr = canonical_trace(a, b);
            auto it = tangencies.find(pair_id(a, b));
            if (it == tangencies.end()) {
              c.pass = false;
              c.note = "no predicted tangency point";
            } else {
              HoroPoint pt = to_horo(it->second.point);
              double ra = std::abs(side_of(pt, sa));
              double rb = std::abs(side_of(pt, sb));
              HoroPoint img = apply(evaluate(tg, it->second.word), pt);
              double rfix = coord_distance(img, pt);
              double pitch = sa.radius * std::max(kPi / opt.grid_alpha, kPi / opt.grid_beta);
              double scatter = 0.0;
              HoroPoint pt_canonical = translate_point(
                  heisenberg_inverse(sphere(SphereId{SphereFamily::kPlus, a.k}).center), pt);
              for (const TracedPoint& tp : tr.points)
                scatter = std::max(scatter, cygan_distance(tp.p, pt_canonical));
              c.margin = std::max({ra, rb, rfix});
              c.samples = static_cast<int>(tr.points.size());
              // Residual minimum over the scan refined by the predicted
              // contact point, which lies on both spheres.
              double min_residual = std::min(tr.min_abs_other, std::max(ra, rb));
              c.pass = min_residual < 1e-6 && ra < 1e-8 && rb < 1e-8 && rfix < 1e-8 &&
                       scatter <= 10.0 * pitch;
              std::ostringstream note;
              note << "min residual " << tr.min_abs_other << ", word "
                   << word_string(it->second.word);
              c.note = note.str();
            }
          }
          break;
        }
      }
      rep.claims.push_back(c);
    }
  }

  // Tangency verification at theta = pi/3 (same-family and mixed clauses).
  if (tg.parabolic_case) {
    for (const auto& [key, t] : tangencies) {
      ClaimRecord c;
      c.kind = "tangency-point";
      c.id = "tangency " + key;
      HoroPoint pt = to_horo(t.point);
      double ra = std::abs(side_of(pt, sphere(t.a)));
      double rb = std::abs(side_of(pt, sphere(t.b)));
      HoroPoint img = apply(evaluate(tg, t.word), pt);
      double rfix = coord_distance(img, pt);
      c.margin = std::max({ra, rb, rfix});
      c.pass = c.margin < 1e-8;
      c.note = "word " + word_string(t.word);
      rep.claims.push_back(c);
    }
  }

  return rep;
}

// ----------------------------------------------------------------------------
// Triple-intersection minimization
// ----------------------------------------------------------------------------

namespace {

double triple_objective(double theta, const GeographicCoord& gc) {
  return std::max(std::abs(f_eval(SphereFunction::kStar0, theta, gc)),
                  std::abs(f_eval(SphereFunction::kMinusMinus1, theta, gc)));
}

// Pattern search in (alpha, beta, w-hat) with w = w-hat * sqrt(cos alpha).
TripleScan refine_triple(double theta, double a, double b, double wh, double step) {
  auto value = [&](double aa, double bb, double ww) {
    aa = std::clamp(aa, -kPi / 2.0, kPi / 2.0);
    ww = std::clamp(ww, -1.0, 1.0);
    double wmax = std::sqrt(std::max(0.0, std::cos(aa)));
    return triple_objective(theta, {aa, bb, ww * wmax});
  };
  double best = value(a, b, wh);
  while (step > 1e-12) {
    bool improved = false;
    const double da[6] = {step, -step, 0, 0, 0, 0};
    const double db[6] = {0, 0, step, -step, 0, 0};
    const double dw[6] = {0, 0, 0, 0, step, -step};
    for (int d = 0; d < 6; ++d) {
      double na = std::clamp(a + da[d], -kPi / 2.0, kPi / 2.0);
      double nb = b + db[d];
      double nw = std::clamp(wh + dw[d], -1.0, 1.0);
      double v = value(na, nb, nw);
      if (v < best) {
        best = v;
        a = na;
        b = nb;
        wh = nw;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  double wmax = std::sqrt(std::max(0.0, std::cos(a)));
  GeographicCoord gc{a, b, wh * wmax};
  return {best, gc, geographic_point(gc, std::sqrt(2.0))};
}

}  // namespace

TripleScan triple_scan(const TriangleGroup& tg, int grid) {
  const double theta = tg.theta;
  const int na = grid, nb = grid, nw = std::max(9, grid / 2);

  // Keep the best cells, spread out, as refinement seeds.
  struct Seed {
    double v, a, b, wh;
  };
  std::vector<Seed> seeds;
  for (int i = 0; i <= na; ++i) {
    double a = -kPi / 2.0 + kPi * i / na;
    for (int j = 0; j < nb; ++j) {
      double b = kPi * j / nb;
      double wmax = std::sqrt(std::max(0.0, std::cos(a)));
      for (int k = 0; k <= nw; ++k) {
        double wh = -1.0 + 2.0 * k / nw;
        double v = triple_objective(theta, {a, b, wh * wmax});
        if (seeds.size() < 8) {
          seeds.push_back({v, a, b, wh});
          std::sort(seeds.begin(), seeds.end(),
                    [](const Seed& x, const Seed& y) { return x.v < y.v; });
        } else if (v < seeds.back().v) {
          // Replace the worst seed unless a nearby better seed exists.
          bool near = false;
          for (const Seed& s : seeds)
            if (s.v <= v && std::abs(s.a - a) < 0.3 && std::abs(s.b - b) < 0.3) {
              near = true;
              break;
            }
          if (!near) {
            seeds.back() = {v, a, b, wh};
            std::sort(seeds.begin(), seeds.end(),
                      [](const Seed& x, const Seed& y) { return x.v < y.v; });
          }
        }
      }
    }
  }

  TripleScan best{std::numeric_limits<double>::infinity(), {}, {}};
  for (const Seed& s : seeds) {
    TripleScan r = refine_triple(theta, s.a, s.b, s.wh, kPi / na);
    if (r.min_value < best.min_value) best = r;
  }
  return best;
}

FordReport verify_triple(const TriangleGroup& tg) {
  if (tg.theta > kPi / 3.0 + 1e-12)
    throw std::domain_error("verify_triple: requires theta in [0, pi/3]");
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = 2;

  TripleScan scan = triple_scan(tg);
  if (!tg.parabolic_case) {
    ClaimRecord c;
    c.id = "triple empty";
    c.kind = "triple";
    c.margin = scan.min_value;
    c.pass = scan.min_value > 1e-3;
    c.witness = scan.argmin_point;
    c.note = "min of max(|f_star|, |f_minus(-1)|)";
    rep.claims.push_back(c);
    return rep;
  }

  GroupElement g = evaluate(tg, {Letter::kTInv, Letter::kS, Letter::kS});
  BoundaryPoint cusp = fixed_boundary_points(g).at(0);
  ClaimRecord c;
  c.id = "triple minimizer at cusp";
  c.kind = "triple";
  double dz = std::abs(scan.argmin_point.z - cusp.p.z);
  double dt = std::abs(scan.argmin_point.t - cusp.p.t);
  c.margin = std::max(dz, dt);
  c.pass = c.margin < 1e-6;
  c.witness = scan.argmin_point;
  {
    std::ostringstream note;
    note << "min value " << scan.min_value;
    c.note = note.str();
  }
  rep.claims.push_back(c);

  ClaimRecord cf;
  cf.id = "cusp fixed by T^-1 S^2";
  cf.kind = "triple";
  cf.margin = coord_distance(apply(g, to_horo(cusp)), to_horo(cusp));
  cf.pass = cf.margin < 1e-9;
  rep.claims.push_back(cf);
  return rep;
}

// ----------------------------------------------------------------------------
// Side pairings, cycles, tessellation, horoballs
// ----------------------------------------------------------------------------

std::vector<SidePairing> side_pairing_table(int k_window) {
  std::vector<SidePairing> out;
  for (int k = -k_window; k <= k_window; ++k) {
    out.push_back({{SphereFamily::kPlus, k}, word_conj_by_t({Letter::kS}, k),
                   {SphereFamily::kMinus, k}});
    out.push_back({{SphereFamily::kStar, k}, word_conj_by_t({Letter::kS, Letter::kS}, k),
                   {SphereFamily::kStar, k}});
    out.push_back({{SphereFamily::kDiamond, k},
                   word_conj_by_t({Letter::kTInv, Letter::kS, Letter::kTInv, Letter::kS}, k),
                   {SphereFamily::kDiamond, k}});
  }
  return out;
}

std::vector<HoroPoint> ridge_samples(const TriangleGroup& tg, const SphereId& a,
                                     const SphereId& b, int want, const TraceOptions& opt) {
  GiraudTrace tr = giraud_trace(sphere_of(a, tg), sphere_of(b, tg), opt);
  std::vector<IsometricSphere> window;
  for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                         SphereFamily::kDiamond})
    for (int k = -5; k <= 5; ++k) window.push_back(sphere_of({f, k}, tg));
  std::vector<HoroPoint> on_boundary;
  for (const TracedPoint& tp : tr.points) {
    double margin = std::numeric_limits<double>::infinity();
    for (const IsometricSphere& s : window) margin = std::min(margin, side_of(tp.p, s));
    if (margin >= -1e-8) on_boundary.push_back(tp.p);
  }
  if (static_cast<int>(on_boundary.size()) <= want) return on_boundary;
  std::vector<HoroPoint> out;
  out.reserve(static_cast<size_t>(want));
  double stride = static_cast<double>(on_boundary.size()) / want;
  for (int i = 0; i < want; ++i)
    out.push_back(on_boundary[static_cast<size_t>(i * stride)]);
  return out;
}

FordReport verify_side_pairings(const TriangleGroup& tg, const TraceOptions& opt, int samples) {
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = 2;

  const IsometricSphere plus0 = sphere_of({SphereFamily::kPlus, 0}, tg);
  const IsometricSphere minus0 = sphere_of({SphereFamily::kMinus, 0}, tg);
  const IsometricSphere star0 = sphere_of({SphereFamily::kStar, 0}, tg);
  const IsometricSphere dia0 = sphere_of({SphereFamily::kDiamond, 0}, tg);

  // S maps the ridge on P0^M0 onto M0^S0, on the exterior side of P0.
  {
    std::vector<HoroPoint> pts = ridge_samples(tg, {SphereFamily::kPlus, 0},
                                               {SphereFamily::kMinus, 0}, samples, opt);
    ClaimRecord c;
    c.id = "S maps ridge P0 M0 onto M0 S0";
    c.kind = "pairing";
    c.samples = static_cast<int>(pts.size());
    double worst = 0.0, min_ext = std::numeric_limits<double>::infinity();
    for (const HoroPoint& x : pts) {
      HoroPoint y = apply(tg.S, x);
      worst = std::max({worst, std::abs(side_of(y, minus0)), std::abs(side_of(y, star0))});
      min_ext = std::min(min_ext, side_of(y, plus0));
    }
    c.margin = worst;
    c.pass = c.samples >= samples && worst < 1e-7 && min_ext > -1e-7;
    std::ostringstream note;
    note << "min exterior margin vs P0 " << min_ext;
    c.note = note.str();
    rep.claims.push_back(c);
  }

  // The explicit ridge point q(pi/3, pi/6 + theta, sqrt2/2) and its image.
  {
    ClaimRecord c;
    c.id = "ridge point q(pi/3, pi/6+theta, sqrt2/2)";
    c.kind = "pairing";
    GeographicCoord gc{kPi / 3.0, kPi / 6.0 + tg.theta, std::sqrt(0.5)};
    HoroPoint x = geographic_point(gc, plus0);
    double on_ridge = std::max(std::abs(side_of(x, plus0)), std::abs(side_of(x, minus0)));
    HoroPoint y = apply(tg.S, x);
    double img = std::max(std::abs(side_of(y, minus0)), std::abs(side_of(y, star0)));
    double ext = side_of(y, plus0);
    c.margin = std::max(on_ridge, img);
    c.pass = c.margin < 1e-9 && ext > 1e-6;
    std::ostringstream note;
    note << "image exterior margin " << ext;
    c.note = note.str();
    rep.claims.push_back(c);
  }

  // S^2 preserves the star sphere; (S^-1 T)^2 preserves the diamond sphere.
  auto self_paired = [&](const std::string& id, const IsometricSphere& s,
                         const GroupElement& g) {
    ClaimRecord c;
    c.id = id;
    c.kind = "pairing";
    double worst = 0.0;
    int n = 0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        GeographicCoord gc{-kPi / 2.0 + kPi * (i + 0.5) / 10.0, kPi * (j + 0.5) / 10.0, 0.0};
        double wmax = std::sqrt(std::max(0.0, std::cos(gc.alpha)));
        gc.w = wmax * (((i + j) % 2 == 0) ? 0.5 : -0.7);
        HoroPoint x = geographic_point(gc, s);
        HoroPoint y = apply(g, x);
        worst = std::max(worst, std::abs(side_of(y, s)));
        ++n;
      }
    }
    c.samples = n;
    c.margin = worst;
    c.pass = worst < 1e-8;
    rep.claims.push_back(c);
  };
  self_paired("S^2 keeps star sphere", star0, evaluate(tg, {Letter::kS, Letter::kS}));
  self_paired("(S^-1 T)^2 keeps diamond sphere", dia0,
              evaluate(tg, {Letter::kSInv, Letter::kT, Letter::kSInv, Letter::kT}));

  // T^k-translated pairing agrees with conjugation by T^k.
  {
    ClaimRecord c;
    c.id = "pairing k=2 is T^2-conjugate of k=0";
    c.kind = "pairing";
    GroupElement lhs = evaluate(tg, word_conj_by_t({Letter::kS}, 2));
    CMat3 t2 = tg.T.m * tg.T.m;
    CMat3 rhs = t2 * tg.S.m * form_siegel() * t2.adjoint() * form_siegel();
    auto match = projective_compare(lhs.m, rhs, 1e-8);
    GeographicCoord gc{0.3, 1.0, 0.4};
    HoroPoint x2 = geographic_point(gc, sphere_of({SphereFamily::kPlus, 2}, tg));
    HoroPoint y2 = apply(lhs, x2);
    double img = std::abs(side_of(y2, sphere_of({SphereFamily::kMinus, 2}, tg)));
    c.margin = std::max(match.residual, img);
    c.pass = match.equal && img < 1e-8;
    rep.claims.push_back(c);
  }

  return rep;
}

FordReport cycle_check(const TriangleGroup& tg, const TraceOptions& opt, int samples) {
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = 2;

  // Cycle relations.
  const std::vector<std::pair<std::string, Word>> cycles = {
      {"S^4", word_pow(Letter::kS, 4)},
      {"(T^-1 S)^4", word_concat({{Letter::kTInv, Letter::kS},
                                  {Letter::kTInv, Letter::kS},
                                  {Letter::kTInv, Letter::kS},
                                  {Letter::kTInv, Letter::kS}})}};
  for (int k = -2; k <= 2; ++k) {
    for (const auto& [name, core] : cycles) {
      ClaimRecord c;
      c.id = "cycle " + name + " conj T^" + std::to_string(k);
      c.kind = "cycle";
      GroupElement g = evaluate(tg, word_conj_by_t(core, k));
      auto match = projective_compare(g.m, CMat3::identity(), 1e-9);
      c.margin = match.residual;
      c.pass = match.equal;
      rep.claims.push_back(c);
    }
  }

  // Three copies around a ridge: the triple equality holds on the ridge, and
  // the pushed-off point is claimed by exactly the right translate.
  const CVec3 qinf{1.0, 0.0, 0.0};
  const CMat3& h = form_siegel();
  auto tessellation = [&](const std::string& rid, const SphereId& a, const SphereId& b,
                          const GroupElement& g) {
    ClaimRecord c;
    c.id = "three copies along ridge " + rid;
    c.kind = "tessellation";
    GroupElement ginv = inverse(g);
    CVec3 q_pos = g.m * qinf;   // g(qinf)
    CVec3 q_neg = ginv.m * qinf;
    std::vector<HoroPoint> pts = ridge_samples(tg, a, b, samples, opt);
    c.samples = static_cast<int>(pts.size());
    double worst_eq = 0.0;
    bool order_ok = true;
    for (const HoroPoint& x : pts) {
      CVec3 lift = standard_lift(x);
      double a0 = std::abs(hermitian_product(lift, qinf, h));
      double a1 = std::abs(hermitian_product(lift, q_neg, h));
      double a2 = std::abs(hermitian_product(lift, q_pos, h));
      double scale = std::max({a0, a1, a2});
      worst_eq = std::max({worst_eq, std::abs(a0 - a1) / scale, std::abs(a0 - a2) / scale});

      HoroPoint pushed{x.z, x.t, x.u + 1e-4};
      auto argmin3 = [&](const CVec3& l) {
        double v0 = std::abs(hermitian_product(l, qinf, h));
        double v1 = std::abs(hermitian_product(l, q_neg, h));
        double v2 = std::abs(hermitian_product(l, q_pos, h));
        if (v0 < v1 && v0 < v2) return 0;
        if (v1 < v0 && v1 < v2) return 1;
        return 2;
      };
      CVec3 l0 = standard_lift(pushed);
      if (argmin3(l0) != 0) order_ok = false;
      if (argmin3(ginv.m * l0) != 1) order_ok = false;  // neighborhood in g^-1 D
      if (argmin3(g.m * l0) != 2) order_ok = false;     // neighborhood in g D
    }
    c.margin = worst_eq;
    c.pass = c.samples >= samples && worst_eq < 1e-8 && order_ok;
    c.note = order_ok ? "copy assignment D, g^-1 D, g D" : "copy assignment failed";
    rep.claims.push_back(c);
  };
  tessellation("P0 M0", {SphereFamily::kPlus, 0}, {SphereFamily::kMinus, 0}, tg.S);
  tessellation("P0 M-1", {SphereFamily::kPlus, 0}, {SphereFamily::kMinus, -1},
               evaluate(tg, {Letter::kTInv, Letter::kS}));

  return rep;
}

FordReport horoball_consistency(const TriangleGroup& tg) {
  if (!tg.parabolic_case)
    throw std::domain_error("horoball_consistency: requires theta = pi/3");
  FordReport rep;
  rep.theta = tg.theta;
  rep.k_window = 2;

  {
    ClaimRecord c;
    c.id = "cusp cycle S.S.S^-2";
    c.kind = "horoball";
    GroupElement g = evaluate(tg, {Letter::kS, Letter::kS, Letter::kSInv, Letter::kSInv});
    auto match = projective_compare(g.m, CMat3::identity(), 1e-12);
    c.margin = match.residual;
    c.pass = match.equal;
    rep.claims.push_back(c);
  }

  const Word cusp_word = word_concat({{Letter::kTInv, Letter::kS, Letter::kT},
                                      {Letter::kTInv, Letter::kS, Letter::kTInv, Letter::kS},
                                      {Letter::kS}});
  const Word ts2_sq = {Letter::kTInv, Letter::kS, Letter::kS,
                       Letter::kTInv, Letter::kS, Letter::kS};
  GroupElement cusp_g = evaluate(tg, cusp_word);
  GroupElement ts2sq = evaluate(tg, ts2_sq);
  {
    ClaimRecord c;
    c.id = "T^-1 S T (S^-1 T)^-2 S = (T^-1 S^2)^2";
    c.kind = "horoball";
    auto match = projective_compare(cusp_g.m, ts2sq.m, 1e-9);
    c.margin = match.residual;
    c.pass = match.equal;
    rep.claims.push_back(c);
  }
  {
    ClaimRecord c;
    c.id = "(T^-1 S^2)^2 parabolic, trace 3";
    c.kind = "horoball";
    IsometryClass cls = classify(ts2sq);
    cplx tr = su_normalize(ts2sq.m).trace();
    double terr = std::min({std::abs(tr - cplx(3.0, 0.0)),
                            std::abs(tr * cplx(-0.5, std::sqrt(3.0) / 2.0) - cplx(3.0, 0.0)),
                            std::abs(tr * cplx(-0.5, -std::sqrt(3.0) / 2.0) - cplx(3.0, 0.0))});
    c.margin = terr;
    c.pass = cls.type == IsometryType::kParabolic && cls.unipotent && terr < 1e-9;
    rep.claims.push_back(c);
  }
  {
    ClaimRecord c;
    c.id = "cusp point fixed by (T^-1 S^2)^2";
    c.kind = "horoball";
    BoundaryPoint p2 = fixed_boundary_points(
        evaluate(tg, {Letter::kTInv, Letter::kS, Letter::kS})).at(0);
    c.margin = coord_distance(apply(ts2sq, to_horo(p2)), to_horo(p2));
    c.pass = c.margin < 1e-9;
    rep.claims.push_back(c);
  }
  {
    // Side-pairing moves between the accidental cusp points:
    // S(p2) = T(q2) and S^2(p2) = T(p2).
    ClaimRecord c;
    c.id = "cusp orbit moves S(p2)=T(q2), S^2(p2)=T(p2)";
    c.kind = "horoball";
    BoundaryPoint p2 = fixed_boundary_points(
        evaluate(tg, {Letter::kTInv, Letter::kS, Letter::kS})).at(0);
    BoundaryPoint q2 = fixed_boundary_points(
        evaluate(tg, {Letter::kTInv, Letter::kS, Letter::kTInv, Letter::kS, Letter::kT})).at(0);
    double d1 = coord_distance(apply(tg.S, to_horo(p2)), apply(tg.T, to_horo(q2)));
    double d2 = coord_distance(apply(evaluate(tg, {Letter::kS, Letter::kS}), to_horo(p2)),
                               apply(tg.T, to_horo(p2)));
    c.margin = std::max(d1, d2);
    c.pass = c.margin < 1e-9;
    rep.claims.push_back(c);
  }

  return rep;
}

}  // namespace chyp
