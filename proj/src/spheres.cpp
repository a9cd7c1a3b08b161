#include "chyp/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace chyp {

std::string to_string(const SphereId& id) {
  const char* f = "";
  switch (id.family) {
    case SphereFamily::kPlus: f = "P"; break;
    case SphereFamily::kMinus: f = "M"; break;
    case SphereFamily::kStar: f = "S"; break;
    case SphereFamily::kDiamond: f = "D"; break;
  }
  return f + std::to_string(id.k);
}

Word sphere_word(const SphereId& id) {
  Word core;
  switch (id.family) {
    case SphereFamily::kPlus: core = {Letter::kS}; break;
    case SphereFamily::kMinus: core = {Letter::kSInv}; break;
    case SphereFamily::kStar: core = {Letter::kS, Letter::kS}; break;
    case SphereFamily::kDiamond:
      core = {Letter::kSInv, Letter::kT, Letter::kSInv, Letter::kT};
      break;
  }
  return word_conj_by_t(core, id.k);
}

IsometricSphere isometric_sphere(const GroupElement& g) {
  double scale = std::max(1.0, g.m.max_abs());
  cplx g31 = g.m(2, 0);
  if (std::abs(g31) < 1e-10 * scale)
    throw std::domain_error("isometric_sphere: element fixes the point at infinity");
  LiftedPoint c = from_lift(inverse(g).m * CVec3{1.0, 0.0, 0.0});
  if (c.at_infinity)
    throw std::domain_error("isometric_sphere: center at infinity");
  return {{c.p.z, c.p.t}, std::sqrt(2.0 / std::abs(g31)), g.word, std::nullopt};
}

IsometricSphere sphere_of(const SphereId& id, const TriangleGroup& tg) {
  const double th = tg.theta;
  const double kc = 4.0 * id.k * std::cos(th);
  const double kt = 8.0 * id.k * std::sin(2.0 * th);
  const cplx eit(std::cos(th), std::sin(th));
  IsometricSphere s;
  s.word = sphere_word(id);
  s.id = id;
  switch (id.family) {
    case SphereFamily::kPlus:
      s.center = {cplx(kc, 0.0), kt};
      s.radius = std::sqrt(2.0);
      break;
    case SphereFamily::kMinus:
      s.center = {kc + 2.0 * eit, 0.0};
      s.radius = std::sqrt(2.0);
      break;
    case SphereFamily::kStar:
      s.center = {kc + eit, kt / 2.0};
      s.radius = 1.0;
      break;
    case SphereFamily::kDiamond:
      s.center = {kc - std::conj(eit), kt / 2.0};
      s.radius = 1.0;
      break;
  }
  return s;
}

double side_of(const HoroPoint& p, const IsometricSphere& s) {
  double re = std::norm(p.z - s.center.z) + p.u;
  double im = p.t - s.center.t + 2.0 * std::imag(p.z * std::conj(s.center.z));
  return std::hypot(re, im) - s.radius * s.radius;
}

double side_of(const BoundaryPoint& p, const IsometricSphere& s) {
  if (p.at_infinity) throw std::domain_error("side_of: point at infinity");
  return side_of(to_horo(p), s);
}

CVec3 geographic_lift(const GeographicCoord& c, double radius) {
  double ca = std::cos(c.alpha);
  if (ca < 0.0 && ca > -1e-12) ca = 0.0;
  if (c.w * c.w > ca + 1e-9)
    throw std::domain_error("geographic_lift: |w| exceeds sqrt(cos alpha)");
  const double r2 = radius * radius;
  cplx first = -0.5 * r2 * cplx(std::cos(c.alpha), -std::sin(c.alpha));
  cplx second = radius * c.w * cplx(std::cos(-c.alpha / 2.0 + c.beta),
                                    std::sin(-c.alpha / 2.0 + c.beta));
  return {first, second, 1.0};
}

HoroPoint geographic_point(const GeographicCoord& c, double radius) {
  LiftedPoint p = from_lift(geographic_lift(c, radius));
  return p.p;
}

HoroPoint geographic_point(const GeographicCoord& c, const IsometricSphere& s) {
  HoroPoint base = geographic_point(c, s.radius);
  HeisenbergPoint moved = heisenberg_product(s.center, {base.z, base.t});
  return {moved.z, moved.t, base.u};
}

double f_eval(SphereFunction which, double theta, const GeographicCoord& c) {
  const double a = c.alpha, b = c.beta, w = c.w;
  const double s2 = std::sqrt(2.0);
  switch (which) {
    case SphereFunction::kStar0:
      return 2.0 * w * w + 1.0 + std::cos(a) - s2 * w * std::cos(-a / 2.0 + b - theta) -
             2.0 * s2 * w * std::cos(a / 2.0 + b - theta);
    case SphereFunction::kMinus0:
      return 2.0 * w * w + 1.0 + std::cos(a) - s2 * w * std::cos(a / 2.0 + b - theta) -
             2.0 * s2 * w * std::cos(-a / 2.0 + b - theta);
    case SphereFunction::kMinusMinus1:
      return 2.0 * w * w + 1.0 + std::cos(a) + s2 * w * std::cos(a / 2.0 + b + theta) +
             2.0 * s2 * w * std::cos(-a / 2.0 + b + theta);
  }
  return 0.0;
}

// ----------------------------------------------------------------------------
// Giraud tracing
// ----------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
};

// Fast inline version of geographic_point + side_of for the scan loop.
struct SpherePointEval {
  const IsometricSphere& base;
  double alpha = 0.0, beta = 0.0;
  double cos_a = 0.0, sin_a = 0.0;
  cplx dir{0.0, 0.0};  // e^{i(-alpha/2+beta)}
  double r = 0.0, r2 = 0.0;

  void set_cell(double a, double b) {
    alpha = a;
    beta = b;
    cos_a = std::cos(a);
    sin_a = std::sin(a);
    dir = cplx(std::cos(-a / 2.0 + b), std::sin(-a / 2.0 + b));
    r = base.radius;
    r2 = r * r;
  }

  HoroPoint at(double w) const {
    cplx z0 = r * w * dir;
    double t0 = r2 * sin_a;
    double u0 = r2 * (cos_a - w * w);
    if (u0 < 0.0) u0 = 0.0;
    HeisenbergPoint moved = heisenbergmul(base.center, z0, t0);
    return {moved.z, moved.t, u0};
  }

  static HeisenbergPoint heisenbergmul(const HeisenbergPoint& c, cplx z0, double t0) {
    return {c.z + z0, c.t + t0 - 2.0 * std::imag(std::conj(c.z) * z0)};
  }
};

}  // namespace

GiraudTrace giraud_trace(const IsometricSphere& base, const IsometricSphere& other,
                         const TraceOptions& opt) {
  GiraudTrace out;
  out.min_abs_other = std::numeric_limits<double>::infinity();

  const int na = opt.grid_alpha, nb = opt.grid_beta, nw = std::max(2, opt.w_scan);
  SpherePointEval eval{base};
  std::vector<double> h(static_cast<size_t>(nw) + 1);

  std::vector<std::pair<int, int>> cells;  // (alpha index, beta index) per point

  for (int i = 0; i < na; ++i) {
    double alpha = -kPi / 2.0 + kPi * (i + 0.5) / na;
    double wmax = std::sqrt(std::max(0.0, std::cos(alpha)));
    if (wmax < opt.pole_cut) continue;
    for (int j = 0; j < nb; ++j) {
      double beta = kPi * (j + 0.5) / nb;
      eval.set_cell(alpha, beta);
      for (int k = 0; k <= nw; ++k) {
        double w = -wmax + 2.0 * wmax * k / nw;
        h[static_cast<size_t>(k)] = side_of(eval.at(w), other);
        out.min_abs_other = std::min(out.min_abs_other, std::abs(h[static_cast<size_t>(k)]));
      }
      for (int k = 0; k < nw; ++k) {
        double h0 = h[static_cast<size_t>(k)], h1 = h[static_cast<size_t>(k + 1)];
        if (h0 == 0.0 || h0 * h1 >= 0.0) continue;
        double lo = -wmax + 2.0 * wmax * k / nw;
        double hi = -wmax + 2.0 * wmax * (k + 1) / nw;
        double flo = h0;
        for (int it = 0; it < opt.bisect_iters; ++it) {
          double mid = 0.5 * (lo + hi);
          double fm = side_of(eval.at(mid), other);
          if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        double w = 0.5 * (lo + hi);
        GeographicCoord gc{alpha, beta, w};
        HoroPoint p = eval.at(w);
        double ro = std::abs(side_of(p, other));
        out.min_abs_other = std::min(out.min_abs_other, ro);
        out.points.push_back({gc, p, std::abs(side_of(p, base)), ro});
        cells.emplace_back(i, j);
      }
    }
  }

  // Connectivity by epsilon-graph: link points in the same or neighboring
  // grid cells closer than 3x the grid pitch (Cygan distance).
  if (out.points.empty()) {
    out.components = 0;
    out.connected = true;
    return out;
  }
  // Grid pitch in the Cygan gauge: a coordinate step of size d moves a point
  // by about r(sqrt(d) + d) in the Cygan metric (the vertical part scales
  // like a square root).
  double step = std::max(kPi / na, kPi / nb);
  double pitch = base.radius * (std::sqrt(step) + step);
  double eps = 3.0 * pitch;
  std::unordered_map<long long, std::vector<int>> buckets;
  auto key = [nb](int i, int j) { return static_cast<long long>(i) * (nb + 2) + j; };
  for (size_t n = 0; n < cells.size(); ++n)
    buckets[key(cells[n].first, cells[n].second)].push_back(static_cast<int>(n));
  UnionFind uf(out.points.size());
  for (size_t n = 0; n < cells.size(); ++n) {
    auto [ci, cj] = cells[n];
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        int jj = cj + dj;
        // beta wraps: (beta, w) ~ (beta + pi, -w) glues j = 0 to j = nb-1.
        if (jj < 0) jj = nb - 1;
        if (jj >= nb) jj = 0;
        auto it = buckets.find(key(ci + di, jj));
        if (it == buckets.end()) continue;
        for (int m : it->second) {
          if (m <= static_cast<int>(n)) continue;
          if (cygan_distance(out.points[n].p, out.points[static_cast<size_t>(m)].p) < eps)
            uf.unite(static_cast<int>(n), m);
        }
      }
    }
  }
  std::vector<int> roots;
  for (size_t n = 0; n < out.points.size(); ++n) {
    int r = uf.find(static_cast<int>(n));
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  out.components = static_cast<int>(roots.size());
  out.connected = out.components <= 1;
  return out;
}

// ----------------------------------------------------------------------------
// Triple intersection curves
// ----------------------------------------------------------------------------

TripleCurves triple_curves(const TriangleGroup& tg, int samples_per_arc) {
  if (samples_per_arc < 2) throw std::invalid_argument("triple_curves: need >= 2 samples");
  const double th = tg.theta;
  const double r = std::sqrt(2.0);
  TripleCurves out;

  auto push = [&](std::vector<GeographicCoord>& params, std::vector<HoroPoint>& pts,
                  GeographicCoord gc) {
    params.push_back(gc);
    pts.push_back(geographic_point(gc, r));
  };

  // Lagrangian arc: q(alpha, theta, sqrt2/2 cos(alpha/2)), cos(alpha) >= 1/3.
  const double alpha_max = std::acos(1.0 / 3.0);
  for (int i = 0; i < samples_per_arc; ++i) {
    double a = -alpha_max + 2.0 * alpha_max * i / (samples_per_arc - 1);
    push(out.arc_l1_params, out.arc_l1, {a, th, std::sqrt(0.5) * std::cos(a / 2.0)});
  }
  // Complex-line arcs at alpha = 0: 2w^2 - 3 sqrt2 cos(t) w + 2 = 0.
  const double t_star = std::acos(2.0 * std::sqrt(2.0) / 3.0);
  for (int i = 0; i < samples_per_arc; ++i) {
    double t = t_star * i / (samples_per_arc - 1);
    double c = std::cos(t);
    double w = (3.0 * c - std::sqrt(std::max(0.0, 9.0 * c * c - 8.0))) / (2.0 * std::sqrt(2.0));
    push(out.arc_c1_params, out.arc_c1, {0.0, t + th, w});
  }
  const double t_dia = kPi - t_star;  // arccos(-2 sqrt2/3)
  for (int i = 0; i < samples_per_arc; ++i) {
    double t = t_dia + (kPi - t_dia) * i / (samples_per_arc - 1);
    double c = std::cos(t);
    double w = (3.0 * c + std::sqrt(std::max(0.0, 9.0 * c * c - 8.0))) / (2.0 * std::sqrt(2.0));
    push(out.arc_c2_params, out.arc_c2, {0.0, t + th, w});
  }

  out.center = geographic_point({0.0, th, std::sqrt(0.5)}, r);

  // Ideal endpoints in the cyclic order S sends one to the next.
  const std::array<GeographicCoord, 4> ends = {{
      {0.0, t_star + th, 1.0},                        // on the complex-line arc
      {alpha_max, th, std::sqrt(3.0) / 3.0},          // on the Lagrangian arc
      {0.0, -t_star + th, 1.0},                       // complex-line arc, other end
      {-alpha_max, th, std::sqrt(3.0) / 3.0},         // Lagrangian arc, other end
  }};
  for (size_t i = 0; i < 4; ++i) {
    out.endpoint_lifts[i] = geographic_lift(ends[i], r);
    out.endpoints[i] = geographic_point(ends[i], r);
  }
  return out;
}

// ----------------------------------------------------------------------------
// Tangency table at theta = pi/3
// ----------------------------------------------------------------------------

std::vector<Tangency> tangency_points(const TriangleGroup& tg, int k_window) {
  if (!tg.parabolic_case)
    throw std::domain_error("tangency_points: requires theta = pi/3");

  const Word w_ts2 = {Letter::kTInv, Letter::kS, Letter::kS};            // T^-1 S^2
  const Word w_s2t = {Letter::kS, Letter::kS, Letter::kTInv};            // S^2 T^-1
  const Word w_sts = {Letter::kS, Letter::kTInv, Letter::kS};            // S T^-1 S
  const Word w_sts_inv = {Letter::kSInv, Letter::kT, Letter::kSInv};     // S^-1 T S^-1

  std::vector<Tangency> out;
  auto add = [&](SphereId a, SphereId b, const Word& core, int conj_k) {
    Word w = word_conj_by_t(core, conj_k);
    GroupElement g = evaluate(tg, w);
    BoundaryPoint fix = fixed_boundary_points(g).at(0);
    out.push_back({a, b, w, fix});
  };

  using F = SphereFamily;
  for (int k = -k_window; k <= k_window; ++k) {
    if (k + 1 <= k_window) {
      add({F::kStar, k}, {F::kStar, k + 1}, w_s2t, k);
      add({F::kDiamond, k}, {F::kDiamond, k + 1}, w_sts, k);
    }
    if (k - 1 >= -k_window) add({F::kPlus, k}, {F::kStar, k - 1}, w_ts2, k);
    if (k + 1 <= k_window) add({F::kPlus, k}, {F::kDiamond, k + 1}, w_sts_inv, k);
    add({F::kMinus, k}, {F::kDiamond, k}, w_sts, k);
    if (k + 1 <= k_window) add({F::kMinus, k}, {F::kStar, k + 1}, w_s2t, k);
  }
  return out;
}

}  // namespace chyp
