#include <random>

#include "alcove/rootsys.hpp"
#include "doctest.h"

using namespace alcove;

TEST_CASE("root counts and Weyl group orders") {
  struct Row {
    RSType t;
    int npos, nw;
  };
  for (Row r : {Row{RSType::A1, 1, 2}, Row{RSType::A2, 3, 6},
                Row{RSType::B2, 4, 8}, Row{RSType::G2, 6, 12},
                Row{RSType::A3, 6, 24}}) {
    RootSystem rs = build_root_system(r.t);
    CHECK(rs.npos() == r.npos);
    CHECK(rs.order() == r.nw);
    // <alpha_i, alpha_j^vee> equals the Cartan entry for simple roots
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        long p = 0;
        IVec cw = rs.coroot_cowt(j);
        for (int k = 0; k < rs.rank; ++k) p += rs.positive[i].root[k] * cw[k];
        CHECK(p == rs.cartan[i][j]);
      }
    // s_alpha is an involution
    for (int a = 0; a < rs.npos(); ++a)
      CHECK(rs.mul[rs.refl[a]][rs.refl[a]] == 0);
  }
}

TEST_CASE("A1 and A2 basics") {
  RootSystem a1 = build_root_system(RSType::A1);
  CHECK(a1.positive.size() == 1);
  CHECK(a1.cartan[0][0] == 2);

  RootSystem a2 = build_root_system(RSType::A2);
  // R+ = {a1, a2, a1+a2} and (a1+a2)^vee = a1^vee + a2^vee
  REQUIRE(a2.npos() == 3);
  CHECK(a2.positive[2].root == IVec{1, 1});
  CHECK(a2.positive[2].coroot == IVec{1, 1});
}

TEST_CASE("G2 pairings from the Cartan matrix") {
  RootSystem g2 = build_root_system(RSType::G2);
  CHECK(g2.npos() == 6);
  CHECK(g2.cartan[0][1] == -1);
  CHECK(g2.cartan[1][0] == -3);
}

TEST_CASE("simple reflections stabilize the other positive roots") {
  for (RSType t : {RSType::A2, RSType::B2, RSType::G2, RSType::A3}) {
    RootSystem rs = build_root_system(t);
    for (int i = 0; i < rs.rank; ++i) {
      for (int r = 0; r < rs.npos(); ++r) {
        if (r == i) continue;
        IVec img = apply_mat(rs.w[rs.refl[i]].on_root, rs.positive[r].root);
        bool found = false;
        for (const auto& pr : rs.positive)
          if (pr.root == img) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("gkm_check") {
  RootSystem g2 = build_root_system(RSType::G2);
  CHECK(!gkm_check(g2, 3).ok);   // dependence in characteristic 3
  CHECK(gkm_check(g2, 7).ok);

  RootSystem a2 = build_root_system(RSType::A2);
  CHECK(!gkm_check(a2, 2).ok);   // characteristic 2 always excluded
  CHECK(gkm_check(a2, 5).ok);

  CHECK(gkm_check(build_root_system(RSType::A1), 5).ok);
  CHECK(gkm_check(build_root_system(RSType::B2), 7).ok);

  // symmetry of the violation report
  GkmReport rep = gkm_check(g2, 3);
  for (auto [a, b] : rep.dependent_pairs) CHECK(a < b);
  CHECK(!rep.dependent_pairs.empty());
}

TEST_CASE("reflect_coweight formula") {
  RootSystem a1 = build_root_system(RSType::A1);
  // s_alpha(alpha^vee) = -alpha^vee; coweight coords of alpha^vee = (2)
  IVec av = a1.coroot_cowt(0);
  CHECK(av == IVec{2});
  CHECK(reflect_coweight(a1, 0, av) == IVec{-2});

  RootSystem a2 = build_root_system(RSType::A2);
  // s_{a1}(a2^vee) = a1^vee + a2^vee
  IVec a2v = a2.coroot_cowt(1);
  IVec sum = a2.coroot_cowt(2);
  CHECK(reflect_coweight(a2, 0, a2v) == sum);
  // identity acts trivially
  CHECK(apply_mat(a2.w[0].on_cowt, a2v) == a2v);
}

TEST_CASE("conjugation w s_alpha w^{-1} = s_{w(alpha)}") {
  for (RSType t : {RSType::A2, RSType::B2, RSType::G2}) {
    RootSystem rs = build_root_system(t);
    for (int wi = 0; wi < rs.order(); ++wi)
      for (int r = 0; r < rs.npos(); ++r) {
        int conj = rs.mul[rs.mul[wi][rs.refl[r]]][rs.inv[wi]];
        // w(alpha) up to sign is a positive root
        IVec target = apply_mat(rs.w[wi].on_root, rs.positive[r].root);
        bool neg = false;
        for (long x : target)
          if (x < 0) neg = true;
        if (neg)
          for (auto& x : target) x = -x;
        int found = -1;
        for (int q = 0; q < rs.npos(); ++q)
          if (rs.positive[q].root == target) found = q;
        REQUIRE(found >= 0);
        CHECK(conj == rs.refl[found]);
      }
  }
}

TEST_CASE("pairing invariance under the Weyl action") {
  std::mt19937_64 rng(42);
  for (RSType t : {RSType::A2, RSType::B2, RSType::G2, RSType::A3}) {
    RootSystem rs = build_root_system(t);
    for (int trial = 0; trial < 100; ++trial) {
      int wi = rng() % rs.order();
      IVec gamma(rs.rank), h(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        gamma[i] = static_cast<long>(rng() % 7) - 3;
        h[i] = static_cast<long>(rng() % 7) - 3;
      }
      // <w(gamma), w(h)> = <gamma, h> for gamma in ZR, h in X^vee
      IVec wg = apply_mat(rs.w[wi].on_root, gamma);
      IVec wh = apply_mat(rs.w[wi].on_cowt, h);
      long lhs = 0, rhs = 0;
      for (int i = 0; i < rs.rank; ++i) {
        // <sum c_i alpha_i, v> = sum c_i v_i in coweight coordinates
        lhs += wg[i] * wh[i];
        rhs += gamma[i] * h[i];
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("unsupported tag") {
  CHECK_THROWS_AS(parse_type("C3"), AlcoveError);
  CHECK(parse_type("B2") == RSType::B2);
}
