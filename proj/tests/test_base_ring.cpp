#include "alcove/base_ring.hpp"
#include "doctest.h"

using namespace alcove;

TEST_CASE("make_base_ring basics") {
  RootSystem a2 = build_root_system(RSType::A2);
  // U = empty: this is S itself, I_T = R+, R_T^+ = R+
  BaseRing s = make_base_ring(a2, 5, {});
  CHECK(s.not_inverted.size() == 3);
  CHECK(s.refl_closure.size() == 3);
  CHECK(s.saturated());
  CHECK(!s.generic);
  CHECK(!s.subgeneric_root);

  // U = R+: generic
  BaseRing gen = make_base_ring(a2, 5, {0, 1, 2});
  CHECK(gen.generic);
  CHECK(gen.refl_closure.empty());

  // I_T = {a1}: subgeneric
  BaseRing sub = make_base_ring(a2, 5, {1, 2});
  CHECK(sub.subgeneric_root.has_value());
  CHECK(*sub.subgeneric_root == 0);

  // I_T = {a1, a2}: the reflection subgroup contains s_{a1+a2}, so the
  // descriptor with only a1+a2 inverted is not saturated
  CHECK_THROWS_WITH_AS(make_base_ring(a2, 5, {2}),
                       doctest::Contains("not saturated"), AlcoveError);

  // GKM gate
  RootSystem g2 = build_root_system(RSType::G2);
  CHECK_THROWS_AS(make_base_ring(g2, 3, {}), AlcoveError);
}

TEST_CASE("specializations") {
  RootSystem a1 = build_root_system(RSType::A1);
  BaseRing s = make_base_ring(a1, 5, {});
  auto sp = specializations(a1, s);
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].generic);                       // T^empty
  CHECK(sp[1].subgeneric_root.has_value());   // T^alpha = S for A1
  CHECK(sp[1].inverted.empty());

  RootSystem a2 = build_root_system(RSType::A2);
  BaseRing s2 = make_base_ring(a2, 5, {});
  auto sp2 = specializations(a2, s2);
  REQUIRE(sp2.size() == 4);
  CHECK(sp2[0].generic);
  int nsub = 0;
  for (size_t i = 1; i < sp2.size(); ++i) {
    CHECK(sp2[i].saturated());
    if (sp2[i].subgeneric_root) ++nsub;
  }
  CHECK(nsub == 3);

  // specializations of a generic ring are all T^empty
  auto spg = specializations(a2, sp2[0]);
  for (const auto& t : spg) CHECK(hom_exists(sp2[0], t));
}

TEST_CASE("hom_exists is a partial order on descriptors") {
  RootSystem a2 = build_root_system(RSType::A2);
  BaseRing s = make_base_ring(a2, 5, {});
  BaseRing ta = make_base_ring(a2, 5, {1, 2});
  BaseRing tz = make_base_ring(a2, 5, {0, 1, 2});
  CHECK(hom_exists(s, ta));
  CHECK(!hom_exists(ta, s));
  CHECK(hom_exists(ta, tz));
  CHECK(hom_exists(s, tz));
  CHECK(hom_exists(s, s));
  // hom implies reflection sets shrink
  CHECK(ta.refl_closure.size() <= s.refl_closure.size());
  CHECK(tz.refl_closure.size() <= ta.refl_closure.size());
}

TEST_CASE("root naming round trip") {
  RootSystem b2 = build_root_system(RSType::B2);
  for (int r = 0; r < b2.npos(); ++r)
    CHECK(parse_root(b2, root_name(b2, r)) == r);
  auto v = parse_inverted_spec(b2, "all");
  CHECK(static_cast<int>(v.size()) == b2.npos());
  CHECK(parse_inverted_spec(b2, "none").empty());
  auto one = parse_inverted_spec(b2, root_name(b2, 2));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 2);
}
