#pragma once

#include "chyp/isometry.hpp"

namespace chyp {

// ============================================================================
// The one-parameter family of complex hyperbolic (4,4,inf) triangle groups.
// theta in [0, pi/2) fixes three complex lines; the group is generated by the
// complex involutions about them. The even subgroup is <S, T> with S = I2 I3
// elliptic of order 4 and T = I2 I1 a Heisenberg translation.
// ============================================================================

struct TriangleGroup {
  double theta = 0.0;
  bool parabolic_case = false;  // |theta - pi/3| < 1e-12

  CVec3 n1, n2, n3;  // polar vectors of the three mirrors
  GroupElement I1, I2, I3;
  GroupElement S, T;          // S = I2*I3, T = I2*I1
  GroupElement S_inv, T_inv;  // cached inverses
};

// Builds the family member and checks its defining invariants (H-unitarity,
// involutivity, S^4 = 1 projectively, T unipotent). theta outside [0, pi/2)
// is a domain error.
TriangleGroup build_triangle_group(double theta);

// Left-to-right product of the letter matrices; SU-normalized; the empty
// word gives the identity.
GroupElement evaluate(const TriangleGroup& tg, const Word& w);

// Conjugation by the antiholomorphic involution z -> (conj z1, -conj z2,
// conj z3): returns D conj(m) D with D = diag(1,-1,1). Sends T to T^-1 and
// S to T^-1 S; the attached word is rewritten accordingly.
GroupElement tau_conjugate(const TriangleGroup& tg, const GroupElement& g);

// Conjugation by I2, which inverts both generators.
GroupElement i2_conjugate(const TriangleGroup& tg, const GroupElement& g);

// Point action of the antiholomorphic involution on the boundary:
// [z,t] -> [-conj z, -t].
HeisenbergPoint tau_image(const HeisenbergPoint& p);
HoroPoint tau_image(const HoroPoint& p);
BoundaryPoint tau_image(const BoundaryPoint& p);

// Convenience builders for short words.
Word word_pow(Letter l, int n);             // n >= 0 copies of l
Word word_conj_by_t(const Word& w, int k);  // T^k w T^-k, any sign of k
Word word_concat(std::initializer_list<Word> ws);

}  // namespace chyp
