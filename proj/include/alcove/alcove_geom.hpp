#pragma once

// Alcoves as a principal homogeneous set over the affine Weyl group.
// An affine element t_gamma ∘ w is stored as (gamma, w) with gamma in
// simple-root coordinates; the alcove A_g is g(A_e). Equality of alcoves is
// structural equality of (gamma, w). Barycenters are exact rationals with a
// fixed per-type denominator, so hyperplane side tests never touch floats.

#include "alcove/rootsys.hpp"

namespace alcove {

struct AffElem {
  IVec gamma;  // simple-root coordinates
  int w = 0;   // index into RootSystem::w

  bool operator==(const AffElem& o) const {
    return w == o.w && gamma == o.gamma;
  }
  bool operator<(const AffElem& o) const {
    if (w != o.w) return w < o.w;
    return gamma < o.gamma;
  }
};

using Alcove = AffElem;

AffElem aff_identity(const RootSystem& rs);
AffElem aff_translation(const IVec& gamma);
// s_{alpha,n} = t_{n alpha} ∘ s_alpha
AffElem aff_reflection(const RootSystem& rs, int rootIdx, long n);
AffElem aff_mul(const RootSystem& rs, const AffElem& a, const AffElem& b);
AffElem aff_inv(const RootSystem& rs, const AffElem& a);

inline Alcove act_left(const RootSystem& rs, const AffElem& g, const Alcove& a) {
  return aff_mul(rs, g, a);
}
// Right action A_x -> A_{xw}; commutes with the left action.
inline Alcove act_right(const RootSystem& rs, const Alcove& a, const AffElem& g) {
  return aff_mul(rs, a, g);
}

// Barycenter in fundamental-weight coordinates, times rs.bary_den.
IVec barycenter_num(const RootSystem& rs, const Alcove& a);
// Numerator of <lambda_A, alpha^vee> over rs.bary_den.
long alcove_pairing_num(const RootSystem& rs, const Alcove& a, int rootIdx);
// +1 if A lies in H^+_{alpha,n}, -1 if in H^-_{alpha,n}.
int side(const RootSystem& rs, const Alcove& a, int rootIdx, long n);

// ZR-orbit of an alcove, as an element of the finite Weyl group (the orbit
// set is a principal homogeneous W-set with base point the orbit of A_e).
inline int orbit_of(const Alcove& a) { return a.w; }

// Simple affine reflections: walls of the fundamental alcove. The finite
// part of each is s_{root}.
struct SimpleRef {
  AffElem elem;
  int root;  // positive root index of the underlying finite reflection
  std::string name;
};
std::vector<SimpleRef> simple_affine_reflections(const RootSystem& rs);

// Right action on orbit labels: x -> x * s_root.
inline int orbit_right(const RootSystem& rs, int x, const SimpleRef& s) {
  return rs.mul[x][rs.refl[s.root]];
}
// Left action of s_alpha on orbit labels.
inline int orbit_reflect(const RootSystem& rs, int rootIdx, int x) {
  return rs.mul[rs.refl[rootIdx]][x];
}

// All alcoves with |<lambda_A, alpha^vee>| <= radius for every positive
// root, sorted by (finite part index, gamma lex).
std::vector<Alcove> enumerate_box(const RootSystem& rs, long radius);

std::string alcove_name(const RootSystem& rs, const Alcove& a);

}  // namespace alcove
