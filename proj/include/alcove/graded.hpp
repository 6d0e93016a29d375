#pragma once

// Degreewise exact linear algebra for graded modules over T = S[U^{-1}].
//
// An ambient is a free graded module with one slot per (orbit label, shift).
// A homogeneous element of degree d is stored either symbolically as a
// denominator-free tuple of polynomials (ModElem), or as an F_p coordinate
// vector at a fixed denominator cap E: coordinates are the numerator
// coefficients at the common denominator rho^E, rho the product of the
// inverted coroots. Degree-d computations at cap E are exact on the
// subspace of elements presentable with denominator rho^E; for U = empty
// (T = S) they are exact outright. Every report downstream states (D, E).

#include <functional>

#include "alcove/base_ring.hpp"
#include "alcove/linalg.hpp"
#include "alcove/order.hpp"
#include "alcove/poly.hpp"

namespace alcove {

struct Slot {
  int label;  // orbit label (index into W)
  int shift;  // generator degree of this slot, even
  bool operator==(const Slot& o) const {
    return label == o.label && shift == o.shift;
  }
};

struct Ambient {
  std::vector<Slot> slots;
  bool operator==(const Ambient& o) const { return slots == o.slots; }
  int size() const { return static_cast<int>(slots.size()); }
};

// Presentation context: ring plus denominator cap.
struct RingCtx {
  const RootSystem* rs;
  BaseRing ring;
  int cap;            // denominator exponent E per inverted coroot
  PrimeField field;
  SPoly rho_cap;      // rho^E
  int denom_deg;      // 2 * E * |U|

  RingCtx(const RootSystem& r, const BaseRing& t, int capE);
  // even degrees covered at this cap, from -denom_deg up to dmax
  std::vector<int> degree_list(int dmax) const;
};

// Per-degree coordinate layout: slot s holds the monomials of
// S_{(d - shift_s)/2 + E|U|}; width 0 when that is negative or fractional.
struct DegLayout {
  int deg = 0;
  std::vector<int> off;    // per-slot offset into the coordinate vector
  std::vector<int> mexp;   // per-slot total numerator exponent, -1 if empty
  int width = 0;
};
DegLayout make_layout(const RingCtx& ctx, const Ambient& amb, int d);

// Symbolic element: denominator-free, entry s homogeneous of deg - shift_s.
struct ModElem {
  int deg = 0;
  std::vector<SPoly> c;
  bool zero() const;
};

// Raw numerator tuple -> coordinates (no rho^E applied).
FpVec coords_raw(const RingCtx& ctx, const Ambient& amb, const DegLayout& lay,
                 const std::vector<SPoly>& entries);
// Symbolic element at degree elem.deg -> coordinates (multiplies by rho^E).
FpVec coords_of(const RingCtx& ctx, const Ambient& amb, const ModElem& e);
// Coordinates -> content-cleared symbolic element.
ModElem elem_from_coords(const RingCtx& ctx, const Ambient& amb,
                         const DegLayout& lay, const FpVec& v);

// Per-degree bases of a graded subspace of the ambient.
struct GradedSpace {
  Ambient amb;
  std::map<int, FpMat> deg;  // row-reduced rows per degree

  int dim(int d) const {
    auto it = deg.find(d);
    return it == deg.end() ? 0 : static_cast<int>(it->second.size());
  }
  std::vector<int> dims(const std::vector<int>& degrees) const;
};

// Expression of a span basis row as sum coeff * mono * gen.
struct SpanTerm {
  int gen;
  Expo mono;
  fp_t coeff;
};
using SpanExpr = std::vector<SpanTerm>;

// T_coeff-span of the generators, presented over ctx (requires
// U_coeff subset U_ctx), per degree in `degrees`. Optionally returns the
// expressions of the basis rows in terms of the generators.
GradedSpace span_over(const RingCtx& ctx, const BaseRing& coeff_ring,
                      const Ambient& amb, const std::vector<ModElem>& gens,
                      const std::vector<int>& degrees,
                      std::map<int, std::vector<SpanExpr>>* exprs = nullptr);

// Shorthand: span over the presentation ring itself.
GradedSpace span_self(const RingCtx& ctx, const Ambient& amb,
                      const std::vector<ModElem>& gens,
                      const std::vector<int>& degrees,
                      std::map<int, std::vector<SpanExpr>>* exprs = nullptr);

// Minimal-ish generator list reproducing the given per-degree bases
// (scanned in ascending degree; new basis vectors become generators).
std::vector<ModElem> extract_generators(const RingCtx& ctx, const Ambient& amb,
                                        const GradedSpace& target);

// Solution space of the congruence system on ⊕_{x in L} T: for every
// unordered pair {x, s_alpha x} inside L with alpha not inverted,
// z_x = z_{s_alpha x} mod alpha^vee. Ambient slots are the labels of L in
// ascending order, shift 0.
GradedSpace congruence_sections(const RingCtx& ctx, uint32_t label_set,
                                const std::vector<int>& degrees);

// Multiply coordinates by a per-label homogeneous polynomial (degree step =
// poly degree); feeds componentwise structure-algebra actions.
FpVec mul_per_label(const RingCtx& ctx, const Ambient& amb, int d,
                    const FpVec& v,
                    const std::function<const SPoly&(int label)>& z);

// Projection to the slots selected by `keep`; returns the sub-ambient and
// the per-degree coordinate projection.
Ambient sub_ambient(const Ambient& amb, const std::vector<int>& keep);
FpVec project_coords(const RingCtx& ctx, const Ambient& amb, int d,
                     const FpVec& v, const std::vector<int>& keep);

// Re-present coordinates computed over `from` (same ambient, U_from subset
// U_to, cap_from <= cap_to) in the layout of `to`.
FpVec recap_coords(const RingCtx& from, const RingCtx& to, const Ambient& amb,
                   int d, const FpVec& v);

std::string render_elem(const RingCtx& ctx, const Ambient& amb,
                        const ModElem& e);

}  // namespace alcove
