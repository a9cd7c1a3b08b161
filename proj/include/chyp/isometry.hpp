#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chyp/complex3.hpp"
#include "chyp/heisenberg.hpp"

namespace chyp {

// ============================================================================
// Group elements: an SU(2,1)-normalized matrix together with an optional word
// in the generators S, T. Classification of holomorphic isometries.
// ============================================================================

enum class Letter : std::uint8_t { kS, kSInv, kT, kTInv };

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word reduce_word(Word w);  // cancel adjacent inverse pairs
std::string word_string(const Word& w);  // e.g. "S S^-1 T"

struct GroupElement {
  CMat3 m;
  Word word;  // empty = no word attached
};

// Residual of g* H g = H, relative to the matrix scale.
double unitarity_residual(const CMat3& m);

// g^-1 = H g* H for H-unitary g; falls back to the adjugate inverse.
GroupElement inverse(const GroupElement& g);

enum class IsometryType { kIdentity, kElliptic, kParabolic, kLoxodromic };

struct IsometryClass {
  IsometryType type = IsometryType::kIdentity;
  bool unipotent = false;  // parabolic only
  int order = 0;           // elliptic only; 0 = not determined within max_order
};

// Trace-based classification for real traces, eigenvalue-modulus fallback
// otherwise. Throws if the matrix is not H-unitary.
IsometryClass classify(const GroupElement& g, int max_order = 12);

// Complex involution with positive polar vector n:
//   z |-> -z + 2 <z,n>/<n,n> n.
GroupElement complex_involution(const CVec3& polar);

// Left Heisenberg translation by [z,t]: unipotent upper triangular, fixes the
// point at infinity and moves the origin to [z,t].
GroupElement heisenberg_translation(cplx z, double t);

// Boundary fixed points: one for a parabolic, two for a loxodromic
// (attracting first). Elliptic or identity input is a domain error.
std::vector<BoundaryPoint> fixed_boundary_points(const GroupElement& g);

// Action on closure points through lifts.
LiftedPoint apply(const GroupElement& g, const LiftedPoint& p);
BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p);
HoroPoint apply(const GroupElement& g, const HoroPoint& p);  // throws if image is infinite

}  // namespace chyp
