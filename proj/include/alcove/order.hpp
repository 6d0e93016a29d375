#pragma once

// The partial order on a finite alcove window and the associated topology
// (down-sets are open). The order is the reachability closure of the
// generating relations -- dominant translations, and reflections s_{alpha,n}
// with alpha in R_T^+ applied to alcoves on the negative side -- computed in
// a padded box and then restricted. A window is certified order-stable when
// growing the padding by one does not change the restricted relation;
// uncertified windows refuse downstream sheaf computations.

#include <cstdint>
#include <functional>

#include "alcove/alcove_geom.hpp"
#include "alcove/base_ring.hpp"

namespace alcove {

constexpr int kMaxWindow = 128;

// Subset of a window, at most kMaxWindow alcoves.
struct OpenBits {
  std::array<uint64_t, 2> b{0, 0};

  static OpenBits none() { return {}; }
  bool get(int i) const { return (b[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { b[i >> 6] |= uint64_t(1) << (i & 63); }
  void clear(int i) { b[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  OpenBits operator|(const OpenBits& o) const {
    return {{b[0] | o.b[0], b[1] | o.b[1]}};
  }
  OpenBits operator&(const OpenBits& o) const {
    return {{b[0] & o.b[0], b[1] & o.b[1]}};
  }
  OpenBits minus(const OpenBits& o) const {
    return {{b[0] & ~o.b[0], b[1] & ~o.b[1]}};
  }
  bool operator==(const OpenBits& o) const { return b == o.b; }
  bool operator<(const OpenBits& o) const { return b < o.b; }
  bool empty() const { return !b[0] && !b[1]; }
  bool subset_of(const OpenBits& o) const {
    return (b[0] & ~o.b[0]) == 0 && (b[1] & ~o.b[1]) == 0;
  }
  int count() const {
    return __builtin_popcountll(b[0]) + __builtin_popcountll(b[1]);
  }
  std::vector<int> elems(int n) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }
};

struct CheckResult {
  bool ok = true;
  std::string detail;
};

class Window {
 public:
  const RootSystem* rs = nullptr;
  BaseRing ring;
  std::vector<Alcove> alcoves;  // canonical order: (finite part, gamma lex)
  int padding = 0;
  bool order_stable = false;

  int size() const { return static_cast<int>(alcoves.size()); }
  int index_of(const Alcove& a) const;  // -1 when absent
  // {j : A_j <= A_i} within the window, including i itself.
  const OpenBits& below(int i) const { return below_[i]; }
  const OpenBits& above(int i) const { return above_[i]; }
  bool leq(int i, int j) const { return above_[i].get(j); }

  int orbit(int i) const { return orbit_[i]; }
  OpenBits orbit_set(int label) const;
  // Labels of ZR-orbits meeting a subset.
  uint32_t label_mask(const OpenBits& s) const;

  // Connected-component partition; equals the W_T-coset partition of the
  // orbit labels (components()). Component ids are dense from 0.
  int component_of_alcove(int i) const { return comp_[i]; }
  int n_components() const { return n_comp_; }
  int component_of_label(int label) const;
  uint32_t component_labels(int comp) const;  // label mask of a component

  const std::vector<SimpleRef>& simple_refs() const { return srefs_; }
  // Right action A -> As within the window; -1 if it leaves the window.
  int right(int sIdx, int i) const { return right_[sIdx][i]; }
  bool s_closed(int sIdx) const;
  // Right action on orbit labels.
  int label_right(int sIdx, int label) const;
  // Right action of s on a component id (Lemma: components permute).
  int component_right(int sIdx, int comp) const;

  bool is_open(const OpenBits& s) const;
  OpenBits down_hull(const OpenBits& s) const;  // smallest open superset
  OpenBits full() const;
  enum class Shape { Open, Closed, LocallyClosed, None };
  Shape classify(const OpenBits& s) const;

  OpenBits sharp(const OpenBits& j, int sIdx) const;  // J u Js
  OpenBits flat(const OpenBits& j, int sIdx) const;   // J n Js
  OpenBits right_image(const OpenBits& j, int sIdx) const;

  // All down-sets if there are at most `limit`, else empty.
  std::vector<OpenBits> all_downsets(size_t limit = 5000) const;
  // Down-sets if few, otherwise the family generated by principal cones
  // (closed once under union and intersection) together with sharps/flats.
  std::vector<OpenBits> canonical_opens(size_t limit = 5000) const;

  std::string name(int i) const { return alcove_name(*rs, alcoves[i]); }
  std::string set_name(const OpenBits& s) const;
  std::string dot_hasse() const;

  // Structural checks, used by the verification suites.
  CheckResult check_partial_order() const;
  CheckResult check_translation_order() const;  // A <= A+gamma iff gamma >= 0
  CheckResult check_components() const;  // comparability vs W_T-cosets
  CheckResult check_wall_pair_properties(int sIdx) const;  // intervals, (1a),(1b)
  CheckResult check_wall_order_iso(int sIdx) const;  // Lambda != Lambda s case
  CheckResult check_sharp_flat(int sIdx, int samples, uint64_t seed) const;

  // Certifies that `family` is admissible for the T'-topology `other` (same
  // alcove list): every other-open J and orbit x admit a member J' with
  // J n x = J' n x. Returns the certificate table or a failure.
  CheckResult check_admissible(const std::vector<OpenBits>& family,
                               const Window& other) const;
  std::vector<OpenBits> s_invariant_opens(int sIdx, size_t limit = 5000) const;

  friend Window make_window(const RootSystem& rsys, const BaseRing& t,
                            std::vector<Alcove> alcs, int padding);

 private:
  std::vector<OpenBits> below_, above_;
  std::vector<int> orbit_;
  std::vector<int> comp_;
  int n_comp_ = 0;
  std::vector<int> label_comp_;  // per orbit label
  std::vector<SimpleRef> srefs_;
  std::vector<std::vector<int>> right_;
};

Window make_window(const RootSystem& rs, const BaseRing& t,
                   std::vector<Alcove> alcoves, int padding);
Window box_window(const RootSystem& rs, const BaseRing& t, long radius,
                  int padding);
// Box window enlarged so that the right action of the given simple affine
// reflection stays inside.
Window s_closed_box_window(const RootSystem& rs, const BaseRing& t,
                           long radius, int padding, int sIdx);

// gamma in Z_{>=0} R^+ ?
bool in_positive_root_monoid(const RootSystem& rs, const IVec& gamma);

}  // namespace alcove
