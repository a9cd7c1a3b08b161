#include "chyp/triangle_group.hpp"

#include <stdexcept>

namespace chyp {

TriangleGroup build_triangle_group(double theta) {
  if (!(theta >= 0.0 && theta < kPi / 2.0))
    throw std::domain_error("build_triangle_group: theta must lie in [0, pi/2)");

  TriangleGroup tg;
  tg.theta = theta;
  tg.parabolic_case = std::abs(theta - kPi / 3.0) < 1e-12;

  const cplx eit(std::cos(theta), std::sin(theta));
  tg.n1 = {eit, 1.0, 0.0};
  tg.n2 = {-std::conj(eit), 1.0, 0.0};
  tg.n3 = {1.0, 0.0, 1.0};

  tg.I1 = complex_involution(tg.n1);
  tg.I2 = complex_involution(tg.n2);
  tg.I3 = complex_involution(tg.n3);

  tg.S = {su_normalize(tg.I2.m * tg.I3.m), {Letter::kS}};
  tg.T = {su_normalize(tg.I2.m * tg.I1.m), {Letter::kT}};
  tg.S_inv = {inverse(tg.S).m, {Letter::kSInv}};
  tg.T_inv = {inverse(tg.T).m, {Letter::kTInv}};

  // Defining invariants.
  for (const GroupElement* g : {&tg.I1, &tg.I2, &tg.I3, &tg.S, &tg.T}) {
    if (unitarity_residual(g->m) > 1e-10)
      throw std::runtime_error("build_triangle_group: generator is not H-unitary");
  }
  for (const GroupElement* inv : {&tg.I1, &tg.I2, &tg.I3}) {
    if (!projective_compare(inv->m * inv->m, CMat3::identity(), 1e-10).equal)
      throw std::runtime_error("build_triangle_group: mirror is not an involution");
  }
  CMat3 s2 = tg.S.m * tg.S.m;
  if (!projective_compare(s2 * s2, CMat3::identity(), 1e-9).equal)
    throw std::runtime_error("build_triangle_group: S does not have order 4");
  if (std::abs(tg.T.m.trace() - cplx(3.0, 0.0)) > 1e-9)
    throw std::runtime_error("build_triangle_group: T is not unipotent");
  return tg;
}

GroupElement evaluate(const TriangleGroup& tg, const Word& w) {
  CMat3 m = CMat3::identity();
  for (Letter l : w) {
    switch (l) {
      case Letter::kS: m = m * tg.S.m; break;
      case Letter::kSInv: m = m * tg.S_inv.m; break;
      case Letter::kT: m = m * tg.T.m; break;
      case Letter::kTInv: m = m * tg.T_inv.m; break;
    }
  }
  return {su_normalize(m), w};
}

namespace {

Word tau_letter_image(Letter l) {
  switch (l) {
    case Letter::kS: return {Letter::kTInv, Letter::kS};
    case Letter::kSInv: return {Letter::kSInv, Letter::kT};
    case Letter::kT: return {Letter::kTInv};
    case Letter::kTInv: return {Letter::kT};
  }
  return {};
}

Letter i2_letter_image(Letter l) {
  switch (l) {
    case Letter::kS: return Letter::kSInv;
    case Letter::kSInv: return Letter::kS;
    case Letter::kT: return Letter::kTInv;
    case Letter::kTInv: return Letter::kT;
  }
  return l;
}

}  // namespace

GroupElement tau_conjugate(const TriangleGroup&, const GroupElement& g) {
  static const CMat3 d = CMat3::diagonal(1.0, -1.0, 1.0);
  Word w;
  for (Letter l : g.word) {
    Word img = tau_letter_image(l);
    w.insert(w.end(), img.begin(), img.end());
  }
  return {d * g.m.conjugate() * d, reduce_word(w)};
}

GroupElement i2_conjugate(const TriangleGroup& tg, const GroupElement& g) {
  Word w;
  w.reserve(g.word.size());
  for (Letter l : g.word) w.push_back(i2_letter_image(l));
  return {su_normalize(tg.I2.m * g.m * tg.I2.m), w};
}

HeisenbergPoint tau_image(const HeisenbergPoint& p) { return {-std::conj(p.z), -p.t}; }

HoroPoint tau_image(const HoroPoint& p) { return {-std::conj(p.z), -p.t, p.u}; }

BoundaryPoint tau_image(const BoundaryPoint& p) {
  if (p.at_infinity) return p;
  return BoundaryPoint::finite(tau_image(p.p));
}

Word word_pow(Letter l, int n) {
  if (n < 0) throw std::invalid_argument("word_pow: n must be >= 0");
  return Word(static_cast<size_t>(n), l);
}

Word word_conj_by_t(const Word& w, int k) {
  Word out;
  Letter fwd = k >= 0 ? Letter::kT : Letter::kTInv;
  Letter bwd = k >= 0 ? Letter::kTInv : Letter::kT;
  int n = std::abs(k);
  out.insert(out.end(), static_cast<size_t>(n), fwd);
  out.insert(out.end(), w.begin(), w.end());
  out.insert(out.end(), static_cast<size_t>(n), bwd);
  return reduce_word(out);
}

Word word_concat(std::initializer_list<Word> ws) {
  Word out;
  for (const Word& w : ws) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace chyp
