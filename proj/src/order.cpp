#include "alcove/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace alcove {

bool in_positive_root_monoid(const RootSystem& rs, const IVec& gamma) {
  static thread_local std::map<std::pair<const RootSystem*, IVec>, bool> memo;
  for (long x : gamma)
    if (x < 0) return false;
  if (std::all_of(gamma.begin(), gamma.end(), [](long x) { return x == 0; }))
    return true;
  auto key = std::make_pair(&rs, gamma);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int r = 0; r < rs.npos() && !ok; ++r) {
    IVec g = gamma;
    bool nonneg = true;
    for (int i = 0; i < rs.rank; ++i) {
      g[i] -= rs.positive[r].root[i];
      if (g[i] < 0) nonneg = false;
    }
    if (nonneg && in_positive_root_monoid(rs, g)) ok = true;
  }
  memo[key] = ok;
  return ok;
}

namespace {

using DynBits = std::vector<uint64_t>;

void dyn_set(DynBits& b, int i) { b[i >> 6] |= uint64_t(1) << (i & 63); }
bool dyn_get(const DynBits& b, int i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}
bool dyn_or_into(DynBits& a, const DynBits& b) {
  bool changed = false;
  for (size_t k = 0; k < a.size(); ++k) {
    uint64_t v = a[k] | b[k];
    if (v != a[k]) {
      a[k] = v;
      changed = true;
    }
  }
  return changed;
}

long window_radius(const RootSystem& rs, const std::vector<Alcove>& alcs) {
  long r = 1;
  for (const auto& a : alcs)
    for (int t = 0; t < rs.npos(); ++t) {
      long p = std::abs(alcove_pairing_num(rs, a, t));
      r = std::max(r, (p + rs.bary_den - 1) / rs.bary_den);
    }
  return r;
}

// above[i] = set of j in `alcs` with A_i <= A_j, computed through the padded
// box of the given radius.
std::vector<OpenBits> relation_through_box(const RootSystem& rs,
                                           const BaseRing& ring,
                                           const std::vector<Alcove>& alcs,
                                           long pad_radius) {
  std::vector<Alcove> padded = enumerate_box(rs, pad_radius);
  std::map<Alcove, int> pidx;
  for (size_t i = 0; i < padded.size(); ++i) pidx[padded[i]] = (int)i;
  const int n = static_cast<int>(padded.size());
  const int words = (n + 63) / 64;

  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i) {
    // dominant translations
    for (int j = 0; j < n; ++j) {
      if (i == j || padded[j].w != padded[i].w) continue;
      IVec g(rs.rank);
      for (int k = 0; k < rs.rank; ++k)
        g[k] = padded[j].gamma[k] - padded[i].gamma[k];
      if (in_positive_root_monoid(rs, g)) succ[i].push_back(j);
    }
    // reflections at hyperplanes of R_T^+ from the negative side
    for (int r : ring.refl_closure) {
      for (long m = -pad_radius; m <= pad_radius; ++m) {
        if (side(rs, padded[i], r, m) != -1) continue;
        Alcove b = act_left(rs, aff_reflection(rs, r, m), padded[i]);
        auto it = pidx.find(b);
        if (it != pidx.end()) succ[i].push_back(it->second);
      }
    }
  }

  std::vector<DynBits> up(n, DynBits(words, 0));
  for (int i = 0; i < n; ++i) dyn_set(up[i], i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j : succ[i])
        if (dyn_or_into(up[i], up[j])) changed = true;
  }

  std::vector<int> wi(alcs.size());
  for (size_t i = 0; i < alcs.size(); ++i) {
    auto it = pidx.find(alcs[i]);
    ALC_CHECK(it != pidx.end(), "window not contained in padded box");
    wi[i] = it->second;
  }
  std::vector<OpenBits> above(alcs.size());
  for (size_t i = 0; i < alcs.size(); ++i)
    for (size_t j = 0; j < alcs.size(); ++j)
      if (dyn_get(up[wi[i]], wi[j])) above[i].set(static_cast<int>(j));
  return above;
}

}  // namespace

int Window::index_of(const Alcove& a) const {
  auto it = std::lower_bound(alcoves.begin(), alcoves.end(), a);
  if (it == alcoves.end() || !(*it == a)) return -1;
  return static_cast<int>(it - alcoves.begin());
}

OpenBits Window::orbit_set(int label) const {
  OpenBits s;
  for (int i = 0; i < size(); ++i)
    if (orbit_[i] == label) s.set(i);
  return s;
}

uint32_t Window::label_mask(const OpenBits& s) const {
  uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (s.get(i)) m |= 1u << orbit_[i];
  return m;
}

int Window::component_of_label(int label) const { return label_comp_[label]; }

uint32_t Window::component_labels(int comp) const {
  uint32_t m = 0;
  for (size_t l = 0; l < label_comp_.size(); ++l)
    if (label_comp_[l] == comp) m |= 1u << l;
  return m;
}

bool Window::s_closed(int sIdx) const {
  for (int i = 0; i < size(); ++i)
    if (right_[sIdx][i] < 0) return false;
  return true;
}

int Window::label_right(int sIdx, int label) const {
  return rs->mul[label][rs->refl[srefs_[sIdx].root]];
}

int Window::component_right(int sIdx, int comp) const {
  for (size_t l = 0; l < label_comp_.size(); ++l)
    if (label_comp_[l] == comp)
      return label_comp_[label_right(sIdx, static_cast<int>(l))];
  return -1;
}

bool Window::is_open(const OpenBits& s) const {
  for (int i = 0; i < size(); ++i)
    if (s.get(i) && !below_[i].subset_of(s)) return false;
  return true;
}

OpenBits Window::down_hull(const OpenBits& s) const {
  OpenBits out;
  for (int i = 0; i < size(); ++i)
    if (s.get(i)) out = out | below_[i];
  return out;
}

OpenBits Window::full() const {
  OpenBits s;
  for (int i = 0; i < size(); ++i) s.set(i);
  return s;
}

Window::Shape Window::classify(const OpenBits& s) const {
  if (is_open(s)) return Shape::Open;
  bool closed = true;
  for (int i = 0; i < size() && closed; ++i)
    if (s.get(i) && !above_[i].subset_of(s)) closed = false;
  if (closed) return Shape::Closed;
  // locally closed iff A,B in S and A <= C <= B imply C in S
  auto e = s.elems(size());
  for (int a : e)
    for (int b : e) {
      OpenBits mid = above_[a] & below_[b];
      if (!mid.subset_of(s)) return Shape::None;
    }
  return Shape::LocallyClosed;
}

OpenBits Window::right_image(const OpenBits& j, int sIdx) const {
  OpenBits out;
  for (int i = 0; i < size(); ++i)
    if (j.get(i)) {
      int k = right_[sIdx][i];
      ALC_CHECK(k >= 0, "window is not closed under the right action of " +
                            srefs_[sIdx].name);
      out.set(k);
    }
  return out;
}

OpenBits Window::sharp(const OpenBits& j, int sIdx) const {
  return j | right_image(j, sIdx);
}

OpenBits Window::flat(const OpenBits& j, int sIdx) const {
  return j & right_image(j, sIdx);
}

std::vector<OpenBits> Window::all_downsets(size_t limit) const {
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = below_[a].count(), cb = below_[b].count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<OpenBits> out;
  OpenBits cur;
  bool overflow = false;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (overflow) return;
    if (k == order.size()) {
      if (out.size() >= limit) {
        overflow = true;
        return;
      }
      out.push_back(cur);
      return;
    }
    int t = order[k];
    rec(k + 1);  // exclude t
    OpenBits preds = below_[t];
    preds.clear(t);
    if (preds.subset_of(cur)) {  // include t
      cur.set(t);
      rec(k + 1);
      cur.clear(t);
    }
  };
  rec(0);
  if (overflow) return {};
  std::sort(out.begin(), out.end(), [](const OpenBits& a, const OpenBits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::vector<OpenBits> Window::canonical_opens(size_t limit) const {
  std::vector<OpenBits> ds = all_downsets(limit);
  if (!ds.empty()) return ds;
  // Fallback: family generated by principal down-cones, one round of
  // pairwise unions and intersections, then sharps and flats.
  std::set<OpenBits> fam;
  fam.insert(OpenBits::none());
  fam.insert(full());
  for (int i = 0; i < size(); ++i) fam.insert(below_[i]);
  std::vector<OpenBits> cones(fam.begin(), fam.end());
  for (size_t a = 0; a < cones.size(); ++a)
    for (size_t b = a + 1; b < cones.size(); ++b) {
      fam.insert(cones[a] | cones[b]);
      fam.insert(cones[a] & cones[b]);
    }
  for (int s = 0; s < static_cast<int>(srefs_.size()); ++s) {
    if (!s_closed(s)) continue;
    std::vector<OpenBits> cur(fam.begin(), fam.end());
    for (const auto& j : cur) {
      fam.insert(sharp(j, s));
      fam.insert(flat(j, s));
    }
  }
  std::vector<OpenBits> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), [](const OpenBits& a, const OpenBits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::string Window::set_name(const OpenBits& s) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if (s.get(i)) {
      if (!first) os << ", ";
      first = false;
      os << name(i);
    }
  os << "}";
  return os.str();
}

std::string Window::dot_hasse() const {
  static const char* palette[] = {"lightblue", "lightsalmon", "palegreen",
                                  "khaki",     "plum",        "lightgrey",
                                  "aquamarine", "mistyrose"};
  std::ostringstream os;
  os << "digraph order {\n  rankdir=BT;\n";
  for (int i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << name(i) << "\", style=filled, "
       << "fillcolor=" << palette[comp_[i] % 8] << "];\n";
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covering = true;  // no k strictly between
      OpenBits mid = above_[i] & below_[j];
      if (mid.count() > 2) covering = false;
      if (covering) os << "  n" << i << " -> n" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

CheckResult Window::check_partial_order() const {
  for (int i = 0; i < size(); ++i) {
    if (!leq(i, i)) return {false, "not reflexive at " + name(i)};
    for (int j = 0; j < size(); ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        return {false, "not antisymmetric at " + name(i) + "," + name(j)};
      if (!leq(i, j)) continue;
      for (int k = 0; k < size(); ++k)
        if (leq(j, k) && !leq(i, k))
          return {false, "not transitive at " + name(i) + "," + name(j) +
                             "," + name(k)};
    }
  }
  return {};
}

CheckResult Window::check_translation_order() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (alcoves[i].w != alcoves[j].w) continue;
      IVec g(rs->rank);
      for (int k = 0; k < rs->rank; ++k)
        g[k] = alcoves[j].gamma[k] - alcoves[i].gamma[k];
      bool dominant = in_positive_root_monoid(*rs, g);
      if (dominant != leq(i, j))
        return {false, "translation order mismatch at " + name(i) + " vs " +
                           name(j)};
    }
  return {};
}

CheckResult Window::check_components() const {
  // comparability closure
  std::vector<int> uf(size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (leq(i, j)) uf[find(i)] = find(j);
  std::map<std::pair<int, int>, int> pairs;
  for (int i = 0; i < size(); ++i) {
    auto key = std::make_pair(find(i), comp_[i]);
    pairs[key] = 1;
  }
  // bijective correspondence: each closure class meets exactly one coset
  // class and vice versa
  std::map<int, std::set<int>> by_closure, by_coset;
  for (int i = 0; i < size(); ++i) {
    by_closure[find(i)].insert(comp_[i]);
    by_coset[comp_[i]].insert(find(i));
  }
  for (auto& [c, s] : by_closure)
    if (s.size() != 1)
      return {false, "a comparability class meets several W_T-orbit classes"};
  for (auto& [c, s] : by_coset)
    if (s.size() != 1)
      return {false,
              "a W_T-orbit class splits into several comparability classes "
              "(window too small?)"};
  return {};
}

CheckResult Window::check_wall_pair_properties(int sIdx) const {
  for (int i = 0; i < size(); ++i) {
    int j = right_[sIdx][i];
    if (j < 0) continue;
    if (comp_[i] != comp_[j]) continue;  // only the Lambda = Lambda s case
    if (!leq(i, j) && !leq(j, i))
      return {false, name(i) + " and its wall image are incomparable"};
    int lo = leq(i, j) ? i : j, hi = leq(i, j) ? j : i;
    OpenBits mid = above_[lo] & below_[hi];
    if (mid.count() != 2)
      return {false, "{A, As} is not an interval at " + name(i)};
    if (leq(j, i)) {  // As <= A
      for (int b = 0; b < size(); ++b) {
        int bs = right_[sIdx][b];
        if (bs < 0) continue;
        if (leq(b, i) && !leq(bs, i))
          return {false, "property (1a) fails at A=" + name(i) +
                             ", B=" + name(b)};
        if (leq(j, b) && !leq(j, bs))
          return {false, "property (1b) fails at A=" + name(i) +
                             ", B=" + name(b)};
      }
    }
  }
  return {};
}

CheckResult Window::check_wall_order_iso(int sIdx) const {
  for (int i = 0; i < size(); ++i) {
    int is = right_[sIdx][i];
    if (is < 0 || comp_[i] == comp_[is]) continue;
    for (int j = 0; j < size(); ++j) {
      if (comp_[j] != comp_[i]) continue;
      int js = right_[sIdx][j];
      if (js < 0) continue;
      if (leq(i, j) != leq(is, js))
        return {false, "A -> As is not an order isomorphism at " + name(i) +
                           "," + name(j)};
    }
  }
  return {};
}

CheckResult Window::check_sharp_flat(int sIdx, int samples,
                                     uint64_t seed) const {
  if (!s_closed(sIdx))
    return {false, "window not closed under " + srefs_[sIdx].name};
  std::vector<OpenBits> opens = canonical_opens();
  for (const auto& j : opens) {
    if (!is_open(sharp(j, sIdx)))
      return {false, "sharp of " + set_name(j) + " is not open"};
    if (!is_open(flat(j, sIdx)))
      return {false, "flat of " + set_name(j) + " is not open"};
  }
  // union identities hold for arbitrary opens; intersection identities are
  // checked inside components with Lambda = Lambda s.
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const OpenBits& a = opens[rng() % opens.size()];
    const OpenBits& b = opens[rng() % opens.size()];
    if (!(sharp(a | b, sIdx) == (sharp(a, sIdx) | sharp(b, sIdx))))
      return {false, "sharp does not commute with union"};
    if (!(flat(a | b, sIdx) == (flat(a, sIdx) | flat(b, sIdx))))
      return {false, "flat does not commute with union"};
    for (int c = 0; c < n_comp_; ++c) {
      if (component_right(sIdx, c) != c) continue;
      OpenBits comp_set;
      for (int i = 0; i < size(); ++i)
        if (comp_[i] == c) comp_set.set(i);
      OpenBits ac = a & comp_set, bc = b & comp_set;
      if (!(sharp(ac & bc, sIdx) == (sharp(ac, sIdx) & sharp(bc, sIdx))))
        return {false, "sharp does not commute with intersection"};
      if (!(flat(ac & bc, sIdx) == (flat(ac, sIdx) & flat(bc, sIdx))))
        return {false, "flat does not commute with intersection"};
    }
  }
  return {};
}

CheckResult Window::check_admissible(const std::vector<OpenBits>& family,
                                     const Window& other) const {
  ALC_CHECK(alcoves == other.alcoves,
            "admissibility check needs identical alcove lists");
  bool has_full = false;
  for (const auto& j : family)
    if (j == full()) has_full = true;
  if (!has_full) return {false, "family does not contain the whole window"};
  for (const auto& j : family)
    if (!is_open(j))
      return {false, "family member " + set_name(j) + " is not open"};
  std::vector<OpenBits> opens = other.canonical_opens();
  for (const auto& j : opens) {
    for (int label = 0; label < rs->order(); ++label) {
      OpenBits x = orbit_set(label);
      if (x.empty()) continue;
      OpenBits want = j & x;
      bool found = false;
      for (const auto& f : family)
        if ((f & x) == want) {
          found = true;
          break;
        }
      if (!found)
        return {false, "no family member matches " + set_name(j) +
                           " on orbit " + rs->word_name(label)};
    }
  }
  return {};
}

std::vector<OpenBits> Window::s_invariant_opens(int sIdx, size_t limit) const {
  std::vector<OpenBits> out;
  for (const auto& j : canonical_opens(limit))
    if (sharp(j, sIdx) == j) out.push_back(j);
  return out;
}

Window make_window(const RootSystem& rs, const BaseRing& t,
                   std::vector<Alcove> alcs, int padding) {
  ALC_CHECK(padding >= 0, "padding must be >= 0");
  ALC_CHECK(alcs.size() <= kMaxWindow, "window exceeds the supported size");
  std::sort(alcs.begin(), alcs.end());
  alcs.erase(std::unique(alcs.begin(), alcs.end()), alcs.end());

  Window w;
  w.rs = &rs;
  w.ring = t;
  w.alcoves = std::move(alcs);
  w.padding = padding;

  long r0 = window_radius(rs, w.alcoves);
  w.above_ = relation_through_box(rs, t, w.alcoves, r0 + padding);
  std::vector<OpenBits> next =
      relation_through_box(rs, t, w.alcoves, r0 + padding + 1);
  w.order_stable = (next == w.above_);

  const int n = w.size();
  w.below_.assign(n, OpenBits());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w.above_[i].get(j)) w.below_[j].set(i);

  w.orbit_.resize(n);
  for (int i = 0; i < n; ++i) w.orbit_[i] = orbit_of(w.alcoves[i]);

  // Component of an orbit label: W_T-coset closure under left reflections.
  int nw = rs.order();
  w.label_comp_.assign(nw, -1);
  int comp_id = 0;
  for (int l = 0; l < nw; ++l) {
    if (w.label_comp_[l] >= 0) continue;
    std::vector<int> stack{l};
    w.label_comp_[l] = comp_id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int r : t.refl_closure) {
        int y = orbit_reflect(rs, r, x);
        if (w.label_comp_[y] < 0) {
          w.label_comp_[y] = comp_id;
          stack.push_back(y);
        }
      }
    }
    ++comp_id;
  }
  w.n_comp_ = comp_id;
  w.comp_.resize(n);
  for (int i = 0; i < n; ++i) w.comp_[i] = w.label_comp_[w.orbit_[i]];

  w.srefs_ = simple_affine_reflections(rs);
  w.right_.assign(w.srefs_.size(), std::vector<int>(n, -1));
  for (size_t s = 0; s < w.srefs_.size(); ++s)
    for (int i = 0; i < n; ++i)
      w.right_[s][i] =
          w.index_of(act_right(rs, w.alcoves[i], w.srefs_[s].elem));
  return w;
}

Window box_window(const RootSystem& rs, const BaseRing& t, long radius,
                  int padding) {
  return make_window(rs, t, enumerate_box(rs, radius), padding);
}

Window s_closed_box_window(const RootSystem& rs, const BaseRing& t,
                           long radius, int padding, int sIdx) {
  std::vector<Alcove> alcs = enumerate_box(rs, radius);
  auto srefs = simple_affine_reflections(rs);
  ALC_CHECK(sIdx >= 0 && sIdx < static_cast<int>(srefs.size()),
            "bad wall reflection index");
  size_t base = alcs.size();
  for (size_t i = 0; i < base; ++i)
    alcs.push_back(act_right(rs, alcs[i], srefs[sIdx].elem));
  return make_window(rs, t, std::move(alcs), padding);
}

}  // namespace alcove
