#pragma once

// Sparse multivariate polynomials over F_p in the coweight variables
// v1..v_rank, graded with deg(v_i) = 2. Monomial order is lex on exponents.

#include <array>
#include <map>
#include <optional>

#include "alcove/fp.hpp"

namespace alcove {

constexpr int kMaxRank = 3;

using Expo = std::array<uint8_t, kMaxRank>;  // exponents, unused entries 0
using IVec = std::vector<long>;

inline int expo_sum(const Expo& e) { return e[0] + e[1] + e[2]; }

struct SPoly {
  std::map<Expo, fp_t> t;  // no zero coefficients stored

  bool zero() const { return t.empty(); }
  bool operator==(const SPoly& o) const { return t == o.t; }
  // 2 * total exponent of any term; -1 for the zero polynomial.
  int degree_if_homogeneous() const;
};

SPoly sp_const(const PrimeField& f, fp_t c);
// Linear form sum(coeffs[i] * v_i), coefficients given as integers.
SPoly sp_linear(const PrimeField& f, const IVec& coeffs);
SPoly sp_add(const PrimeField& f, const SPoly& a, const SPoly& b);
SPoly sp_sub(const PrimeField& f, const SPoly& a, const SPoly& b);
SPoly sp_scale(const PrimeField& f, fp_t c, const SPoly& a);
SPoly sp_mul(const PrimeField& f, const SPoly& a, const SPoly& b);
SPoly sp_mul_mono(const PrimeField& f, const SPoly& a, const Expo& m,
                  fp_t c = 1);
SPoly sp_pow(const PrimeField& f, const SPoly& a, int e);

// Canonical remainder of f modulo the principal ideal (ell) for a linear form
// ell, computed by eliminating the lex-least variable with nonzero
// coefficient. Two polynomials are congruent mod (ell) iff remainders agree.
SPoly reduce_mod_linear(const PrimeField& f, const SPoly& a, const IVec& ell);

// Remainder of the one-divisor multivariate division algorithm (lex order).
// Independent route to ideal membership: rem == 0 iff g | a exactly when g is
// irreducible; used as the oracle for reduce_mod_linear.
SPoly division_remainder(const PrimeField& f, const SPoly& a, const SPoly& g);

// Exact quotient a / g, or nullopt if g does not divide a.
std::optional<SPoly> sp_exact_divide(const PrimeField& f, const SPoly& a,
                                     const SPoly& g);

// Deterministic rendering, terms sorted by lex-ascending exponent.
std::string sp_render(const SPoly& a, int rank);

// Monomials of S with total exponent m in `rank` variables, lex ascending.
// Cached; the returned reference is stable.
const std::vector<Expo>& mono_basis(int rank, int m);
int mono_index(int rank, int m, const Expo& e);

// Localized ring elements: numerator in S, denominator a multiset of coroot
// indices (each entry one inverted positive root). Kept reduced: no coroot
// divides the numerator while present in the denominator.
struct LocElem {
  SPoly num;
  std::map<int, int> den;  // root index -> exponent, entries > 0

  bool zero() const { return num.zero(); }
  int degree_if_homogeneous() const;  // accounts for denominator degree
  bool operator==(const LocElem& o) const {
    return num == o.num && den == o.den;
  }
};

// Context for localized arithmetic: the coroot polynomials by root index and
// the set of roots whose coroots may appear in denominators.
struct LocCtx {
  const PrimeField* f;
  std::vector<SPoly> coroot;   // per positive root, as a linear form in S
  std::vector<int> invertible; // sorted root indices
  bool is_invertible(int r) const;
};

LocElem loc_from_poly(SPoly p);
LocElem loc_canon(const LocCtx& c, LocElem a);
LocElem loc_add(const LocCtx& c, const LocElem& a, const LocElem& b);
LocElem loc_scale(const LocCtx& c, fp_t k, const LocElem& a);
LocElem loc_mul(const LocCtx& c, const LocElem& a, const LocElem& b);
// a / b in S[U^{-1}], or nullopt when b does not divide a there.
std::optional<LocElem> loc_exact_divide(const LocCtx& c, const LocElem& a,
                                        const LocElem& b);
std::string loc_render(const LocCtx& c, const LocElem& a, int rank);

}  // namespace alcove
