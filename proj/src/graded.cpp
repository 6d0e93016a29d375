#include "alcove/graded.hpp"

#include <algorithm>
#include <sstream>

namespace alcove {

RingCtx::RingCtx(const RootSystem& r, const BaseRing& t, int capE)
    : rs(&r), ring(t), cap(capE), field(t.p) {
  ALC_CHECK(capE >= 0, "denominator cap must be >= 0");
  rho_cap = sp_const(field, 1);
  for (int rt : ring.inverted) {
    SPoly cv = sp_linear(field, r.coroot_cowt(rt));
    for (int e = 0; e < capE; ++e) rho_cap = sp_mul(field, rho_cap, cv);
  }
  denom_deg = 2 * capE * static_cast<int>(ring.inverted.size());
}

std::vector<int> RingCtx::degree_list(int dmax) const {
  std::vector<int> out;
  for (int d = -denom_deg; d <= dmax; d += 2) out.push_back(d);
  return out;
}

DegLayout make_layout(const RingCtx& ctx, const Ambient& amb, int d) {
  DegLayout lay;
  lay.deg = d;
  lay.off.resize(amb.size() + 1, 0);
  lay.mexp.resize(amb.size(), -1);
  int off = 0;
  for (int s = 0; s < amb.size(); ++s) {
    lay.off[s] = off;
    int num = d - amb.slots[s].shift + ctx.denom_deg;
    if (num >= 0 && num % 2 == 0) {
      lay.mexp[s] = num / 2;
      off += static_cast<int>(mono_basis(ctx.rs->rank, num / 2).size());
    }
  }
  lay.off[amb.size()] = off;
  lay.width = off;
  return lay;
}

bool ModElem::zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const SPoly& p) { return p.zero(); });
}

FpVec coords_raw(const RingCtx& ctx, const Ambient& amb, const DegLayout& lay,
                 const std::vector<SPoly>& entries) {
  FpVec v(lay.width, 0);
  for (int s = 0; s < amb.size(); ++s) {
    if (entries[s].zero()) continue;
    ALC_CHECK(lay.mexp[s] >= 0, "entry in a slot with empty graded piece");
    for (const auto& [e, cf] : entries[s].t) {
      ALC_CHECK(expo_sum(e) == lay.mexp[s], "entry degree mismatch");
      v[lay.off[s] + mono_index(ctx.rs->rank, lay.mexp[s], e)] = cf;
    }
  }
  return v;
}

FpVec coords_of(const RingCtx& ctx, const Ambient& amb, const ModElem& e) {
  DegLayout lay = make_layout(ctx, amb, e.deg);
  std::vector<SPoly> sc(e.c.size());
  for (size_t s = 0; s < e.c.size(); ++s)
    sc[s] = sp_mul(ctx.field, e.c[s], ctx.rho_cap);
  return coords_raw(ctx, amb, lay, sc);
}

ModElem elem_from_coords(const RingCtx& ctx, const Ambient& amb,
                         const DegLayout& lay, const FpVec& v) {
  ModElem e;
  e.c.assign(amb.size(), SPoly{});
  for (int s = 0; s < amb.size(); ++s) {
    if (lay.mexp[s] < 0) continue;
    const auto& monos = mono_basis(ctx.rs->rank, lay.mexp[s]);
    for (size_t k = 0; k < monos.size(); ++k) {
      fp_t cf = v[lay.off[s] + k];
      if (cf) e.c[s].t[monos[k]] = cf;
    }
  }
  e.deg = lay.deg + ctx.denom_deg;
  // content clearing: divide out inverted coroots common to all entries
  for (int rt : ctx.ring.inverted) {
    SPoly cv = sp_linear(ctx.field, ctx.rs->coroot_cowt(rt));
    while (!e.zero()) {
      bool all = true;
      std::vector<SPoly> q(e.c.size());
      for (size_t s = 0; s < e.c.size(); ++s) {
        if (e.c[s].zero()) continue;
        auto dq = sp_exact_divide(ctx.field, e.c[s], cv);
        if (!dq) {
          all = false;
          break;
        }
        q[s] = *dq;
      }
      if (!all) break;
      for (size_t s = 0; s < e.c.size(); ++s)
        if (!e.c[s].zero()) e.c[s] = q[s];
      e.deg -= 2;
    }
  }
  return e;
}

std::vector<int> GradedSpace::dims(const std::vector<int>& degrees) const {
  std::vector<int> out;
  for (int d : degrees) out.push_back(dim(d));
  return out;
}

GradedSpace span_over(const RingCtx& ctx, const BaseRing& coeff_ring,
                      const Ambient& amb, const std::vector<ModElem>& gens,
                      const std::vector<int>& degrees,
                      std::map<int, std::vector<SpanExpr>>* exprs) {
  ALC_CHECK(std::includes(ctx.ring.inverted.begin(), ctx.ring.inverted.end(),
                          coeff_ring.inverted.begin(),
                          coeff_ring.inverted.end()),
            "coefficient ring must map to the presentation ring");
  // fix = prod over U_ctx \ U_coeff of (alpha^vee)^cap
  SPoly fix = sp_const(ctx.field, 1);
  int ncoeff = static_cast<int>(coeff_ring.inverted.size());
  for (int rt : ctx.ring.inverted)
    if (!coeff_ring.is_inverted(rt)) {
      SPoly cv = sp_linear(ctx.field, ctx.rs->coroot_cowt(rt));
      for (int e = 0; e < ctx.cap; ++e) fix = sp_mul(ctx.field, fix, cv);
    }
  GradedSpace out;
  out.amb = amb;
  for (int d : degrees) {
    DegLayout lay = make_layout(ctx, amb, d);
    RowBasis basis(ctx.field, lay.width, exprs != nullptr);
    std::vector<std::pair<int, Expo>> inserted_src;
    for (size_t g = 0; g < gens.size(); ++g) {
      int k = d - gens[g].deg;            // coefficient degree
      int me = k + 2 * ctx.cap * ncoeff;  // numerator degree over T_coeff
      if (me < 0 || me % 2) continue;
      for (const Expo& mono : mono_basis(ctx.rs->rank, me / 2)) {
        std::vector<SPoly> prod(amb.size());
        for (int s = 0; s < amb.size(); ++s) {
          if (gens[g].c[s].zero()) continue;
          prod[s] = sp_mul_mono(ctx.field,
                                sp_mul(ctx.field, gens[g].c[s], fix), mono);
        }
        FpVec v = coords_raw(ctx, amb, lay, prod);
        if (exprs) inserted_src.emplace_back(static_cast<int>(g), mono);
        basis.insert(v);
      }
    }
    FpMat rows = basis.rows();
    if (exprs) {
      std::vector<SpanExpr> es(rows.size());
      for (int i = 0; i < basis.dim(); ++i) {
        const FpVec& ex = basis.expr(i);
        for (size_t k = 0; k < ex.size(); ++k)
          if (ex[k])
            es[i].push_back(
                {inserted_src[k].first, inserted_src[k].second, ex[k]});
      }
      (*exprs)[d] = std::move(es);
    }
    out.deg[d] = std::move(rows);
  }
  return out;
}

GradedSpace span_self(const RingCtx& ctx, const Ambient& amb,
                      const std::vector<ModElem>& gens,
                      const std::vector<int>& degrees,
                      std::map<int, std::vector<SpanExpr>>* exprs) {
  return span_over(ctx, ctx.ring, amb, gens, degrees, exprs);
}

std::vector<ModElem> extract_generators(const RingCtx& ctx, const Ambient& amb,
                                        const GradedSpace& target) {
  std::vector<ModElem> gens;
  for (const auto& [d, rows] : target.deg) {
    if (rows.empty()) continue;
    GradedSpace have = span_self(ctx, amb, gens, {d});
    DegLayout lay = make_layout(ctx, amb, d);
    RowBasis basis(ctx.field, lay.width);
    for (const auto& r : have.deg[d]) basis.insert(r);
    for (const auto& r : rows)
      if (basis.insert(r)) gens.push_back(elem_from_coords(ctx, amb, lay, r));
  }
  return gens;
}

GradedSpace congruence_sections(const RingCtx& ctx, uint32_t label_set,
                                const std::vector<int>& degrees) {
  const RootSystem& rs = *ctx.rs;
  std::vector<int> labels;
  for (int l = 0; l < rs.order(); ++l)
    if (label_set & (1u << l)) labels.push_back(l);
  Ambient amb;
  for (int l : labels) amb.slots.push_back({l, 0});
  auto slot_of = [&](int label) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), label) -
        labels.begin());
  };
  // congruence pairs inside the label set, non-inverted roots only
  struct CPair {
    int sa, sb, root;
  };
  std::vector<CPair> pairs;
  for (int r : ctx.ring.not_inverted)
    for (int l : labels) {
      int l2 = orbit_reflect(rs, r, l);
      if (l2 <= l) continue;
      if (!(label_set & (1u << l2))) continue;
      pairs.push_back({slot_of(l), slot_of(l2), r});
    }
  GradedSpace out;
  out.amb = amb;
  for (int d : degrees) {
    DegLayout lay = make_layout(ctx, amb, d);
    if (lay.width == 0) {
      out.deg[d] = {};
      continue;
    }
    int me = lay.mexp.empty() ? -1 : lay.mexp[0];  // same for all slots
    FpMat eqs;
    for (const auto& pr : pairs) {
      IVec cw = rs.coroot_cowt(pr.root);
      const auto& monos = mono_basis(rs.rank, me);
      std::map<Expo, int> out_idx;
      FpMat block;
      auto ensure_row = [&](const Expo& e) {
        auto it = out_idx.find(e);
        if (it != out_idx.end()) return it->second;
        int id = static_cast<int>(block.size());
        out_idx[e] = id;
        block.emplace_back(lay.width, 0);
        return id;
      };
      for (size_t k = 0; k < monos.size(); ++k) {
        SPoly mono;
        mono.t[monos[k]] = 1;
        SPoly red = reduce_mod_linear(ctx.field, mono, cw);
        for (const auto& [e, cf] : red.t) {
          int row = ensure_row(e);
          block[row][lay.off[pr.sa] + k] =
              ctx.field.add(block[row][lay.off[pr.sa] + k], cf);
          block[row][lay.off[pr.sb] + k] =
              ctx.field.sub(block[row][lay.off[pr.sb] + k], cf);
        }
      }
      for (auto& r : block) eqs.push_back(std::move(r));
    }
    FpMat sol = nullspace(ctx.field, eqs, lay.width);
    RowBasis basis(ctx.field, lay.width);
    for (const auto& r : sol) basis.insert(r);
    out.deg[d] = basis.rows();
  }
  return out;
}

FpVec mul_per_label(const RingCtx& ctx, const Ambient& amb, int d,
                    const FpVec& v,
                    const std::function<const SPoly&(int label)>& z) {
  DegLayout from = make_layout(ctx, amb, d);
  int step = -1;
  for (int s = 0; s < amb.size(); ++s) {
    const SPoly& p = z(amb.slots[s].label);
    if (!p.zero()) {
      int pd = p.degree_if_homogeneous();
      ALC_CHECK(step < 0 || step == pd, "per-label multiplier inhomogeneous");
      step = pd;
    }
  }
  if (step < 0) step = 0;
  DegLayout to = make_layout(ctx, amb, d + step);
  std::vector<SPoly> prod(amb.size());
  for (int s = 0; s < amb.size(); ++s) {
    if (from.mexp[s] < 0) continue;
    SPoly entry;
    const auto& monos = mono_basis(ctx.rs->rank, from.mexp[s]);
    for (size_t k = 0; k < monos.size(); ++k) {
      fp_t cf = v[from.off[s] + k];
      if (cf) entry.t[monos[k]] = cf;
    }
    prod[s] = sp_mul(ctx.field, entry, z(amb.slots[s].label));
  }
  return coords_raw(ctx, amb, to, prod);
}

Ambient sub_ambient(const Ambient& amb, const std::vector<int>& keep) {
  Ambient out;
  for (int s : keep) out.slots.push_back(amb.slots[s]);
  return out;
}

FpVec project_coords(const RingCtx& ctx, const Ambient& amb, int d,
                     const FpVec& v, const std::vector<int>& keep) {
  DegLayout from = make_layout(ctx, amb, d);
  Ambient sub = sub_ambient(amb, keep);
  DegLayout to = make_layout(ctx, sub, d);
  FpVec out(to.width, 0);
  for (size_t i = 0; i < keep.size(); ++i) {
    int s = keep[i];
    if (from.mexp[s] < 0) continue;
    int n = from.off[s + 1] - from.off[s];
    for (int k = 0; k < n; ++k) out[to.off[i] + k] = v[from.off[s] + k];
  }
  return out;
}

FpVec recap_coords(const RingCtx& from, const RingCtx& to, const Ambient& amb,
                   int d, const FpVec& v) {
  // numerator at rho_from^E_from -> numerator at rho_to^E_to
  for (int rt : from.ring.inverted)
    ALC_CHECK(to.ring.is_inverted(rt),
              "presentation ring does not invert enough coroots");
  SPoly scale = sp_const(to.field, 1);
  for (int rt : to.ring.inverted) {
    int e_to = to.cap;
    int e_from = from.ring.is_inverted(rt) ? from.cap : 0;
    ALC_CHECK(e_to >= e_from, "cannot lower the denominator cap");
    SPoly cv = sp_linear(to.field, to.rs->coroot_cowt(rt));
    for (int e = e_from; e < e_to; ++e) scale = sp_mul(to.field, scale, cv);
  }
  DegLayout lf = make_layout(from, amb, d);
  DegLayout lt = make_layout(to, amb, d);
  std::vector<SPoly> entries(amb.size());
  for (int s = 0; s < amb.size(); ++s) {
    if (lf.mexp[s] < 0) continue;
    SPoly entry;
    const auto& monos = mono_basis(from.rs->rank, lf.mexp[s]);
    for (size_t k = 0; k < monos.size(); ++k) {
      fp_t cf = v[lf.off[s] + k];
      if (cf) entry.t[monos[k]] = cf;
    }
    entries[s] = sp_mul(to.field, entry, scale);
  }
  return coords_raw(to, amb, lt, entries);
}

std::string render_elem(const RingCtx& ctx, const Ambient& amb,
                        const ModElem& e) {
  std::ostringstream os;
  os << "(";
  for (int s = 0; s < amb.size(); ++s) {
    if (s) os << ", ";
    os << ctx.rs->word_name(amb.slots[s].label);
    if (amb.slots[s].shift) os << "[" << amb.slots[s].shift << "]";
    os << ": " << sp_render(e.c[s], ctx.rs->rank);
  }
  os << ")";
  return os.str();
}

}  // namespace alcove
