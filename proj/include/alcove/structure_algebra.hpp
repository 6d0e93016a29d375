#pragma once

// The structure algebra: tuples (z_x) over the orbit set with
// z_x = z_{s_alpha x} mod alpha^vee, its restrictions Z_T(L) to label sets,
// the projection images Z^L, the involution eta_s, the degree-2
// antiinvariant generator, and the component decomposition.

#include "alcove/graded.hpp"

namespace alcove {

// A homogeneous tuple over a label set; absent components are zero.
struct ZTuple {
  uint32_t labels = 0;
  int deg = 0;
  std::map<int, LocElem> comp;

  bool zero() const;
};

struct ZAlgCtx {
  RingCtx rc;
  LocCtx lc;
  std::vector<int> degrees;  // reporting range
  int dmax;

  ZAlgCtx(const RootSystem& rs, const BaseRing& t, int cap, int dmax_);
  const RootSystem& rs() const { return *rc.rs; }
  uint32_t all_labels() const { return (1u << rs().order()) - 1; }
};

// Sections Z_T(L): exact solution space of the congruence system.
GradedSpace z_sections(const ZAlgCtx& z, uint32_t labels);
// Image Z^L of the projection from Z_T(V); subset of z_sections degreewise.
GradedSpace z_image(const ZAlgCtx& z, uint32_t labels);

struct ZAlgebraBasis {
  uint32_t labels;
  GradedSpace sections;           // Z_T(L)
  GradedSpace image;              // Z^L
  std::vector<ModElem> image_gens;
  std::vector<bool> equal_per_degree;  // image == sections, per degree
};
ZAlgebraBasis z_algebra(const ZAlgCtx& z, uint32_t labels);

// eta_s on coordinates of an ambient whose slots are labels of an
// s-invariant set (shift 0): permutes components by x -> xs.
FpVec eta_coords(const ZAlgCtx& z, const Ambient& amb, int d, const FpVec& v,
                 const SimpleRef& s);
ZTuple eta_tuple(const ZAlgCtx& z, const ZTuple& t, const SimpleRef& s);

// Componentwise product and sum of tuples.
ZTuple ztuple_add(const ZAlgCtx& z, const ZTuple& a, const ZTuple& b);
ZTuple ztuple_mul(const ZAlgCtx& z, const ZTuple& a, const ZTuple& b);

// Congruence membership: z_x = z_{s_alpha x} mod alpha^vee whenever both
// labels lie in the set, alpha is not inverted and denominators avoid alpha.
CheckResult validate_ztuple(const ZAlgCtx& z, const ZTuple& t);

// The degree-2 tuple with component w(gamma^vee) at the label w, gamma the
// finite root of s. It lies in Z, and eta_s negates it.
ZTuple antiinvariant_generator(const ZAlgCtx& z, const SimpleRef& s);
// Per-label linear forms of the same tuple, for coordinate-level products.
std::vector<SPoly> antiinvariant_forms(const ZAlgCtx& z, const SimpleRef& s);

// z = a + b * c_s with eta(a) = a, eta(b) = b; throws when the componentwise
// division by c_s fails (that would falsify the free-splitting lemma).
struct InvariantSplit {
  ZTuple inv;     // a
  ZTuple quot;    // b, degree deg(z) - 2
};
InvariantSplit invariant_split(const ZAlgCtx& z, const ZTuple& t,
                               const SimpleRef& s);

// The tuple supported at one label with component prod of all coroots.
ZTuple delta_tuple(const ZAlgCtx& z, int label);

// Z_T decomposes along the components of the window topology: dimensions
// add degreewise and the projections are jointly injective.
struct ComponentDecomposition {
  std::vector<uint32_t> parts;  // label masks per component
  std::vector<GradedSpace> factors;
  CheckResult additivity;
};
ComponentDecomposition component_decomposition(const ZAlgCtx& z,
                                               const Window& w);

// For a union of components L with L n Ls empty: the s-invariants of
// Z^{L u Ls} project isomorphically onto Z^L (checked degreewise).
CheckResult check_swap_invariants(const ZAlgCtx& z, uint32_t labels,
                                  const SimpleRef& s);

// Graded-shape check: dim Z^{L,s}_d + dim Z^{L,s}_{d-2} = dim Z^L_d.
CheckResult check_split_shape(const ZAlgCtx& z, uint32_t labels,
                              const SimpleRef& s);

// Coordinates <-> tuples for ambients with label slots of shift 0.
ZTuple tuple_from_coords(const ZAlgCtx& z, const Ambient& amb, int d,
                         const FpVec& v);
FpVec coords_from_tuple(const ZAlgCtx& z, const Ambient& amb,
                        const ZTuple& t);

std::string render_tuple(const ZAlgCtx& z, const ZTuple& t);

}  // namespace alcove
