#pragma once

// Combinatorial descriptors of base rings T = S[alpha^vee^{-1} : alpha in U].
// Only coroot localizations of S are representable; they are exactly the
// rings the downstream checks specialize along.

#include <optional>

#include "alcove/rootsys.hpp"

namespace alcove {

struct BaseRing {
  uint32_t p = 5;
  std::vector<int> inverted;      // U, sorted positive-root indices
  std::vector<int> not_inverted;  // I_T = R+ \ U, sorted
  std::vector<int> refl_closure;  // R_T^+, sorted
  bool generic = false;
  std::optional<int> subgeneric_root;

  bool is_inverted(int r) const;
  bool saturated() const { return not_inverted == refl_closure; }
  uint32_t inverted_mask() const;
  std::string describe(const RootSystem& rs) const;
};

// Throws on GKM failure or when the descriptor is not saturated (the witness
// reflection is named in the message).
BaseRing make_base_ring(const RootSystem& rs, uint32_t p,
                        const std::vector<int>& inverted);

// T^empty and T^alpha for each positive alpha; all generic or subgeneric.
std::vector<BaseRing> specializations(const RootSystem& rs, const BaseRing& t);

// True iff a base-ring homomorphism T -> T' exists, i.e. U subset U'.
bool hom_exists(const BaseRing& t, const BaseRing& t2);

// Root naming for the CLI: "a1", "a1+a2", "a1+2a2", ...
std::string root_name(const RootSystem& rs, int rootIdx);
int parse_root(const RootSystem& rs, const std::string& name);
// "none", "all", or comma-separated root names.
std::vector<int> parse_inverted_spec(const RootSystem& rs,
                                     const std::string& spec);

}  // namespace alcove
