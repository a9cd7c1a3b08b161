#include "chyp/isometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace chyp {

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kUnitTol = 1e-8;

Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::kS: return Letter::kSInv;
    case Letter::kSInv: return Letter::kS;
    case Letter::kT: return Letter::kTInv;
    case Letter::kTInv: return Letter::kT;
  }
  return Letter::kS;
}

}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
  return out;
}

Word reduce_word(Word w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == letter_inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    switch (w[i]) {
      case Letter::kS: s += "S"; break;
      case Letter::kSInv: s += "S^-1"; break;
      case Letter::kT: s += "T"; break;
      case Letter::kTInv: s += "T^-1"; break;
    }
  }
  return s;
}

double unitarity_residual(const CMat3& m) {
  const CMat3& h = form_siegel();
  CMat3 r = m.adjoint() * h * m - h;
  double scale = std::max(1.0, m.max_abs());
  return r.max_abs() / (scale * scale);
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out;
  out.word = inverse_word(g.word);
  if (unitarity_residual(g.m) < 1e-6) {
    const CMat3& h = form_siegel();
    out.m = h * g.m.adjoint() * h;
  } else {
    out.m = g.m.inverse();
  }
  return out;
}

namespace {

// Among the three SU(2,1) center representatives m, wm, w^2 m, pick the one
// whose trace is closest to real.
CMat3 prefer_real_trace(const CMat3& m0) {
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  CMat3 best = m0;
  double best_im = std::abs(m0.trace().imag());
  CMat3 cur = m0;
  for (int k = 1; k < 3; ++k) {
    cur = cur * omega;
    double im = std::abs(cur.trace().imag());
    if (im < best_im) {
      best_im = im;
      best = cur;
    }
  }
  return best;
}

}  // namespace

IsometryClass classify(const GroupElement& g, int max_order) {
  if (unitarity_residual(g.m) > kUnitTol)
    throw std::domain_error("classify: matrix is not H-unitary");
  CMat3 m = prefer_real_trace(su_normalize(g.m));

  auto projectively_identity = [&](const CMat3& x) {
    return projective_compare(x, CMat3::identity(), 1e-9).equal;
  };

  auto elliptic_order = [&]() {
    CMat3 p = m;
    for (int k = 2; k <= max_order; ++k) {
      p = p * m;
      if (projectively_identity(p)) return k;
    }
    return 0;
  };

  cplx tr = m.trace();
  if (std::abs(tr.imag()) < kTraceTol) {
    double t = tr.real();
    if (std::abs(t - 3.0) < kTraceTol) {
      if (projectively_identity(m)) return {IsometryType::kIdentity, false, 0};
      return {IsometryType::kParabolic, true, 0};
    }
    if (t > 3.0) return {IsometryType::kLoxodromic, false, 0};
    if (t >= -1.0 - kTraceTol && t < 3.0 - kTraceTol)
      return {IsometryType::kElliptic, false, elliptic_order()};
    // Real trace below -1: fall through to the eigenvalue path.
  }

  auto ev = eigenvalues(m);
  double mod_dev = 0.0;
  for (const cplx& l : ev) mod_dev = std::max(mod_dev, std::abs(std::abs(l) - 1.0));
  if (mod_dev > 1e-7) return {IsometryType::kLoxodromic, false, 0};

  // Unit eigenvalues: diagonalizable <=> elliptic, else parabolic.
  // Cluster eigenvalues and compare geometric to algebraic multiplicity.
  bool diagonalizable = true;
  for (int i = 0; i < 3 && diagonalizable; ++i) {
    int mult = 0;
    for (int j = 0; j < 3; ++j)
      if (std::abs(ev[static_cast<size_t>(j)] - ev[static_cast<size_t>(i)]) < 1e-5) ++mult;
    if (mult == 1) continue;
    CMat3 shifted = m - CMat3::identity() * ev[static_cast<size_t>(i)];
    // Geometric multiplicity from the rank of the shifted matrix: rank 2
    // leaves a 1-dim kernel, detected through the cross products of rows.
    CVec3 r0 = shifted.row(0), r1 = shifted.row(1), r2 = shifted.row(2);
    double rank2 = std::max({cross_bilinear(r0, r1).norm(), cross_bilinear(r0, r2).norm(),
                             cross_bilinear(r1, r2).norm()});
    double rank1 = std::max({r0.norm(), r1.norm(), r2.norm()});
    if (mult == 2 && rank2 > 1e-6 * std::max(1.0, rank1 * rank1)) diagonalizable = false;
    if (mult == 3 && rank1 > 1e-6) diagonalizable = false;
  }
  if (!diagonalizable) {
    bool unip = std::abs(tr - cplx(3.0, 0.0)) < kTraceTol;
    return {IsometryType::kParabolic, unip, 0};
  }
  if (projectively_identity(m)) return {IsometryType::kIdentity, false, 0};
  return {IsometryType::kElliptic, false, elliptic_order()};
}

GroupElement complex_involution(const CVec3& polar) {
  const CMat3& h = form_siegel();
  cplx nn = hermitian_product(polar, polar, h);
  if (nn.real() <= 1e-12 || std::abs(nn.imag()) > 1e-10 * std::abs(nn))
    throw std::domain_error("complex_involution: polar vector must be positive");
  // -I + 2 n n* H / <n,n>
  CMat3 outer;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer(i, j) = polar[i] * std::conj(polar[j]);
  CMat3 m = outer * h * (2.0 / nn) - CMat3::identity();
  return {m, {}};
}

GroupElement heisenberg_translation(cplx z, double t) {
  CMat3 m = CMat3::identity();
  m(0, 1) = -std::conj(z);
  m(0, 2) = cplx(-std::norm(z), t) * 0.5;
  m(1, 2) = z;
  return {m, {}};
}

std::vector<BoundaryPoint> fixed_boundary_points(const GroupElement& g) {
  IsometryClass cls = classify(g);
  CMat3 m = prefer_real_trace(su_normalize(g.m));
  auto ev = eigenvalues(m);

  // Kernel vectors land numerically close to, not exactly on, the null cone;
  // flatten the residual height onto the boundary.
  auto boundary_of = [](const CVec3& v) {
    LiftedPoint lp = from_lift(v);
    if (lp.at_infinity) return BoundaryPoint::infinity();
    if (lp.p.u > 1e-6)
      throw std::domain_error("fixed_boundary_points: fixed point is not on the boundary");
    return BoundaryPoint::finite(lp.p.z, lp.p.t);
  };
  auto null_eigvec = [&](cplx lambda) {
    CVec3 v = kernel_vector(m - CMat3::identity() * lambda);
    return v;
  };

  if (cls.type == IsometryType::kParabolic) {
    // The fixed point is the null eigenvector of the repeated eigenvalue.
    // A unipotent has eigenvalue tr/3 exactly, which beats the Cardano
    // accuracy on a triple root.
    cplx lambda;
    if (cls.unipotent) {
      lambda = m.trace() / 3.0;
    } else {
      lambda = ev[0];
      for (int i = 0; i < 3; ++i) {
        cplx acc = 0.0;
        int mult = 0;
        for (int j = 0; j < 3; ++j)
          if (std::abs(ev[static_cast<size_t>(j)] - ev[static_cast<size_t>(i)]) < 1e-5) {
            acc += ev[static_cast<size_t>(j)];
            ++mult;
          }
        if (mult >= 2) {
          lambda = acc / static_cast<double>(mult);
          break;
        }
      }
    }
    return {boundary_of(null_eigvec(lambda))};
  }
  if (cls.type == IsometryType::kLoxodromic) {
    size_t hi = 0, lo = 0;
    for (size_t i = 1; i < 3; ++i) {
      if (std::abs(ev[i]) > std::abs(ev[hi])) hi = i;
      if (std::abs(ev[i]) < std::abs(ev[lo])) lo = i;
    }
    return {boundary_of(null_eigvec(ev[hi])), boundary_of(null_eigvec(ev[lo]))};
  }
  throw std::domain_error("fixed_boundary_points: element is not parabolic or loxodromic");
}

LiftedPoint apply(const GroupElement& g, const LiftedPoint& p) {
  CVec3 lift = p.at_infinity ? CVec3{1.0, 0.0, 0.0} : standard_lift(p.p);
  return from_lift(g.m * lift);
}

BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p) {
  return from_lift(g.m * standard_lift(p)).boundary();
}

HoroPoint apply(const GroupElement& g, const HoroPoint& p) {
  LiftedPoint image = from_lift(g.m * standard_lift(p));
  if (image.at_infinity) throw std::domain_error("apply: image is the point at infinity");
  return image.p;
}

}  // namespace chyp
