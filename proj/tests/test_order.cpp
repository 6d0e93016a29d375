#include <algorithm>

#include "alcove/order.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

const RootSystem& a1() {
  static RootSystem rs = build_root_system(RSType::A1);
  return rs;
}
const RootSystem& a2() {
  static RootSystem rs = build_root_system(RSType::A2);
  return rs;
}

}  // namespace

TEST_CASE("positive root monoid membership") {
  const RootSystem& rs = a2();
  CHECK(in_positive_root_monoid(rs, IVec{0, 0}));
  CHECK(in_positive_root_monoid(rs, IVec{1, 0}));
  CHECK(in_positive_root_monoid(rs, IVec{1, 1}));
  CHECK(in_positive_root_monoid(rs, IVec{2, 1}));
  CHECK(!in_positive_root_monoid(rs, IVec{-1, 0}));
  CHECK(!in_positive_root_monoid(rs, IVec{1, -1}));
}

TEST_CASE("A1 with T=S is a total order by position") {
  BaseRing s = make_base_ring(a1(), 5, {});
  Window w = box_window(a1(), s, 3, 2);
  REQUIRE(w.size() == 6);
  CHECK(w.order_stable);
  CHECK(w.check_partial_order().ok);
  for (int i = 0; i < w.size(); ++i)
    for (int j = 0; j < w.size(); ++j) {
      bool cmp = w.leq(i, j) || w.leq(j, i);
      CHECK(cmp);  // total
      long pi = alcove_pairing_num(a1(), w.alcoves[i], 0);
      long pj = alcove_pairing_num(a1(), w.alcoves[j], 0);
      CHECK(w.leq(i, j) == (pi <= pj));
    }
  CHECK(w.n_components() == 1);
  CHECK(w.check_components().ok);
}

TEST_CASE("A1 generic: only dominant translations remain") {
  BaseRing gen = make_base_ring(a1(), 5, {0});
  Window w = box_window(a1(), gen, 3, 2);
  CHECK(w.order_stable);
  for (int i = 0; i < w.size(); ++i)
    for (int j = 0; j < w.size(); ++j) {
      long pi = alcove_pairing_num(a1(), w.alcoves[i], 0);
      long pj = alcove_pairing_num(a1(), w.alcoves[j], 0);
      long diff = (pj - pi) / a1().bary_den;  // even integer iff comparable
      bool expect = (pj >= pi) && ((diff % 2) == 0) &&
                    (w.alcoves[i].w == w.alcoves[j].w);
      CHECK(w.leq(i, j) == expect);
    }
  CHECK(w.n_components() == 2);
  CHECK(w.check_components().ok);
  CHECK(w.check_translation_order().ok);
}

TEST_CASE("translation criterion on A1 and A2 windows") {
  BaseRing s1 = make_base_ring(a1(), 5, {});
  CHECK(box_window(a1(), s1, 4, 2).check_translation_order().ok);
  BaseRing s2 = make_base_ring(a2(), 5, {});
  Window w = box_window(a2(), s2, 2, 2);
  CHECK(w.order_stable);
  CHECK(w.check_partial_order().ok);
  CHECK(w.check_translation_order().ok);
}

TEST_CASE("open sets, hulls, classification") {
  BaseRing s = make_base_ring(a1(), 5, {});
  Window w = box_window(a1(), s, 3, 2);
  // indices sorted by position on the line
  std::vector<int> pos(w.size());
  for (int i = 0; i < w.size(); ++i) pos[i] = i;
  std::sort(pos.begin(), pos.end(), [&](int i, int j) {
    return alcove_pairing_num(a1(), w.alcoves[i], 0) <
           alcove_pairing_num(a1(), w.alcoves[j], 0);
  });
  // open hull of a point is its down-cone
  OpenBits pt;
  int mid = pos[3];
  pt.set(mid);
  OpenBits cone = w.down_hull(pt);
  CHECK(w.is_open(cone));
  CHECK(cone == w.below(mid));
  CHECK(w.down_hull(OpenBits::none()).empty());
  CHECK(w.down_hull(cone) == cone);  // idempotent
  CHECK(w.classify(cone) == Window::Shape::Open);
  CHECK(w.classify(w.full().minus(cone)) == Window::Shape::Closed);
  // {A_0, A_2} skips A_1: neither open, closed, nor locally closed
  OpenBits gap;
  gap.set(pos[1]);
  gap.set(pos[3]);
  CHECK(w.classify(gap) == Window::Shape::None);
  OpenBits seg;
  seg.set(pos[1]);
  seg.set(pos[2]);
  CHECK(w.classify(seg) == Window::Shape::LocallyClosed);
}

TEST_CASE("downset enumeration") {
  BaseRing s = make_base_ring(a1(), 5, {});
  Window w = box_window(a1(), s, 3, 1);
  auto ds = w.all_downsets();
  CHECK(ds.size() == 7);  // chain of 6: the 7 lower intervals
  for (const auto& j : ds) CHECK(w.is_open(j));

  BaseRing gen = make_base_ring(a1(), 5, {0});
  Window wg = box_window(a1(), gen, 3, 1);
  auto ds2 = wg.all_downsets();
  CHECK(ds2.size() == 16);  // two chains of 3: (3+1)^2
}

TEST_CASE("sharp and flat on A1") {
  BaseRing s = make_base_ring(a1(), 5, {});
  // window 8 closed under the affine wall reflection of A_e
  Window w = s_closed_box_window(a1(), s, 4, 2, 1);
  int sIdx = 1;
  REQUIRE(w.s_closed(sIdx));
  // J = {n <= 0}: J# adds the alcove (1,2), Jb removes (0,1)
  OpenBits j;
  for (int i = 0; i < w.size(); ++i)
    if (alcove_pairing_num(a1(), w.alcoves[i], 0) < a1().bary_den) j.set(i);
  REQUIRE(w.is_open(j));
  OpenBits sh = w.sharp(j, sIdx), fl = w.flat(j, sIdx);
  CHECK(w.is_open(sh));
  CHECK(w.is_open(fl));
  CHECK(sh.count() == j.count() + 1);
  CHECK(fl.count() == j.count() - 1);
  CHECK(j.subset_of(sh));
  CHECK(fl.subset_of(j));
  // s-invariant open: sharp = flat = J
  OpenBits inv = w.sharp(j, sIdx);
  CHECK(w.sharp(inv, sIdx) == inv);
  CHECK(w.flat(inv, sIdx) == inv);
  // empty set
  CHECK(w.sharp(OpenBits::none(), sIdx).empty());
  CHECK(w.flat(OpenBits::none(), sIdx).empty());
  CHECK(w.check_sharp_flat(sIdx, 50, 42).ok);
}

TEST_CASE("wall pair properties and order isomorphism") {
  BaseRing s = make_base_ring(a1(), 5, {});
  for (int sIdx = 0; sIdx < 2; ++sIdx) {
    Window w = s_closed_box_window(a1(), s, 5, 2, sIdx);
    CHECK(w.check_wall_pair_properties(sIdx).ok);
  }
  BaseRing gen = make_base_ring(a1(), 5, {0});
  for (int sIdx = 0; sIdx < 2; ++sIdx) {
    Window w = s_closed_box_window(a1(), gen, 5, 2, sIdx);
    CHECK(w.check_wall_order_iso(sIdx).ok);
  }
  BaseRing s2 = make_base_ring(a2(), 5, {});
  for (int sIdx = 0; sIdx < 3; ++sIdx) {
    Window w = s_closed_box_window(a2(), s2, 2, 2, sIdx);
    CHECK(w.check_wall_pair_properties(sIdx).ok);
  }
}

TEST_CASE("components on A2 subgeneric") {
  BaseRing sub = make_base_ring(a2(), 5, {1, 2});  // I_T = {a1}
  Window w = box_window(a2(), sub, 2, 2);
  CHECK(w.order_stable);
  CHECK(w.n_components() == 3);
  CHECK(w.check_components().ok);
}

TEST_CASE("admissible families") {
  BaseRing s = make_base_ring(a1(), 5, {});
  BaseRing gen = make_base_ring(a1(), 5, {0});
  Window ws = s_closed_box_window(a1(), s, 4, 2, 1);
  Window wg = make_window(a1(), gen, ws.alcoves, 2);

  // T-opens form a T'-admissible family
  CHECK(ws.check_admissible(ws.canonical_opens(), wg).ok);
  // trivially, T-opens are T-admissible
  CHECK(ws.check_admissible(ws.canonical_opens(), ws).ok);
  // s-invariant T-opens are T-admissible
  CHECK(ws.check_admissible(ws.s_invariant_opens(1), ws).ok);
  // ... and T'-admissible
  CHECK(ws.check_admissible(ws.s_invariant_opens(1), wg).ok);
  // a family missing the certificate member fails
  std::vector<OpenBits> bad{OpenBits::none(), ws.full()};
  CHECK(!ws.check_admissible(bad, ws).ok);
}

TEST_CASE("monotonicity of topologies under hom") {
  BaseRing s = make_base_ring(a1(), 5, {});
  BaseRing gen = make_base_ring(a1(), 5, {0});
  Window ws = box_window(a1(), s, 4, 2);
  Window wg = make_window(a1(), gen, ws.alcoves, 2);
  for (const auto& j : ws.canonical_opens()) CHECK(wg.is_open(j));
}

TEST_CASE("dot export") {
  BaseRing s = make_base_ring(a1(), 5, {});
  Window w = box_window(a1(), s, 2, 1);
  std::string dot = w.dot_hasse();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("e:0") != std::string::npos);
}
