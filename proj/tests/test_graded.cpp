#include "alcove/graded.hpp"
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

ModElem make_elem(int deg, std::vector<SPoly> entries) {
  return ModElem{deg, std::move(entries)};
}

}  // namespace

TEST_CASE("span of the diagonal in S + S") {
  BaseRing s = make_base_ring(a1(), 5, {});
  RingCtx ctx(a1(), s, 0);
  Ambient amb{{{0, 0}, {1, 0}}};
  PrimeField f(5);
  std::vector<ModElem> gens{make_elem(0, {sp_const(f, 1), sp_const(f, 1)})};
  GradedSpace sp = span_self(ctx, amb, gens, {0, 2, 4});
  CHECK(sp.dim(0) == 1);
  CHECK(sp.dim(2) == 1);  // (v,v)
  CHECK(sp.dim(4) == 1);
  // idempotence: spanning the computed basis reproduces the dimensions
  std::vector<ModElem> basis_elems;
  for (int d : {0, 2, 4}) {
    DegLayout lay = make_layout(ctx, amb, d);
    for (const auto& r : sp.deg[d])
      basis_elems.push_back(elem_from_coords(ctx, amb, lay, r));
  }
  GradedSpace sp2 = span_self(ctx, amb, basis_elems, {0, 2, 4});
  for (int d : {0, 2, 4}) CHECK(sp.dim(d) == sp2.dim(d));
}

TEST_CASE("A1 congruence sections: dims (1,2,2) and kernel of projection") {
  BaseRing s = make_base_ring(a1(), 5, {});
  RingCtx ctx(a1(), s, 0);
  uint32_t all = 3;  // both labels
  GradedSpace z = congruence_sections(ctx, all, {0, 2, 4});
  CHECK(z.dim(0) == 1);
  CHECK(z.dim(2) == 2);
  CHECK(z.dim(4) == 2);

  // kernel of the first-factor projection at degree 2 has dimension 1
  PrimeField f(5);
  DegLayout lay = make_layout(ctx, z.amb, 2);
  int first_width = lay.off[1];
  FpMat eqs;
  for (int k = 0; k < first_width; ++k) {
    FpVec row(lay.width, 0);
    row[k] = 1;
    eqs.push_back(row);
  }
  FpMat ker = intersect_rowspaces(f, z.deg[2], nullspace(f, eqs, lay.width),
                                  lay.width);
  CHECK(rank_of(f, ker, lay.width) == 1);
}

TEST_CASE("expression tracking reconstructs basis rows") {
  BaseRing s = make_base_ring(a2(), 5, {});
  RingCtx ctx(a2(), s, 0);
  Ambient amb{{{0, 0}, {1, 0}}};
  PrimeField f(5);
  SPoly v1 = sp_linear(f, IVec{1, 0}), v2 = sp_linear(f, IVec{0, 1});
  std::vector<ModElem> gens{make_elem(0, {sp_const(f, 1), sp_const(f, 1)}),
                            make_elem(2, {v1, v2})};
  std::map<int, std::vector<SpanExpr>> exprs;
  GradedSpace sp = span_self(ctx, amb, gens, {0, 2, 4}, &exprs);
  for (int d : {0, 2, 4}) {
    DegLayout lay = make_layout(ctx, amb, d);
    for (size_t i = 0; i < sp.deg[d].size(); ++i) {
      FpVec rebuilt(lay.width, 0);
      for (const SpanTerm& t : exprs[d][i]) {
        std::vector<SPoly> prod(amb.size());
        for (int sl = 0; sl < amb.size(); ++sl)
          prod[sl] = sp_mul_mono(f, gens[t.gen].c[sl], t.mono, t.coeff);
        FpVec v = coords_raw(ctx, amb, lay, prod);
        for (int k = 0; k < lay.width; ++k)
          rebuilt[k] = f.add(rebuilt[k], v[k]);
      }
      CHECK(rebuilt == sp.deg[d][i]);
    }
  }
}

TEST_CASE("generator extraction finds the pair-module generators") {
  BaseRing s = make_base_ring(a1(), 5, {});
  RingCtx ctx(a1(), s, 0);
  GradedSpace z = congruence_sections(ctx, 3, {0, 2, 4, 6});
  auto gens = extract_generators(ctx, z.amb, z);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].deg == 0);
  CHECK(gens[1].deg == 2);
  GradedSpace sp = span_self(ctx, z.amb, gens, {0, 2, 4, 6});
  for (int d : {0, 2, 4, 6}) CHECK(sp.dim(d) == z.dim(d));
}

TEST_CASE("localized ring: A1 Laurent dims at a cap") {
  BaseRing gen = make_base_ring(a1(), 5, {0});
  RingCtx ctx(a1(), gen, 2);
  Ambient amb{{{0, 0}}};
  PrimeField f(5);
  std::vector<ModElem> gens{make_elem(0, {sp_const(f, 1)})};
  auto degs = ctx.degree_list(4);
  GradedSpace sp = span_self(ctx, amb, gens, degs);
  for (int d : degs) CHECK(sp.dim(d) == 1);  // Laurent: 1 per even degree
}

TEST_CASE("congruences vanish for inverted roots") {
  BaseRing gen = make_base_ring(a1(), 5, {0});
  RingCtx ctx(a1(), gen, 1);
  GradedSpace z = congruence_sections(ctx, 3, ctx.degree_list(4));
  for (int d : ctx.degree_list(4)) CHECK(z.dim(d) == 2);
}

TEST_CASE("recap re-presents coordinates faithfully") {
  BaseRing s = make_base_ring(a1(), 5, {});
  BaseRing gen = make_base_ring(a1(), 5, {0});
  RingCtx cs(a1(), s, 0);
  RingCtx cg(a1(), gen, 1);
  Ambient amb{{{0, 0}, {1, 0}}};
  PrimeField f(5);
  SPoly v = sp_linear(f, IVec{1});
  ModElem e = make_elem(2, {v, sp_scale(f, f.neg(1), v)});
  FpVec over_s = coords_of(cs, amb, e);
  FpVec moved = recap_coords(cs, cg, amb, 2, over_s);
  CHECK(moved == coords_of(cg, amb, e));
}

TEST_CASE("per-label multiplication") {
  BaseRing s = make_base_ring(a1(), 5, {});
  RingCtx ctx(a1(), s, 0);
  Ambient amb{{{0, 0}, {1, 0}}};
  PrimeField f(5);
  SPoly av = sp_linear(f, a1().coroot_cowt(0));
  SPoly mav = sp_scale(f, f.neg(1), av);
  ModElem one = make_elem(0, {sp_const(f, 1), sp_const(f, 1)});
  FpVec v = coords_of(ctx, amb, one);
  FpVec out = mul_per_label(ctx, amb, 0, v, [&](int label) -> const SPoly& {
    return label == 0 ? av : mav;
  });
  ModElem expect = make_elem(2, {av, mav});
  CHECK(out == coords_of(ctx, amb, expect));
}
