#include "alcove/poly.hpp"
#include <functional>

#include <algorithm>
#include <sstream>

namespace alcove {

int SPoly::degree_if_homogeneous() const {
  if (t.empty()) return -1;
  int d = 2 * expo_sum(t.begin()->first);
  for (const auto& [e, c] : t)
    ALC_CHECK(2 * expo_sum(e) == d, "polynomial is not homogeneous");
  return d;
}

SPoly sp_const(const PrimeField& f, fp_t c) {
  SPoly r;
  c %= f.p;
  if (c) r.t[Expo{0, 0, 0}] = c;
  return r;
}

SPoly sp_linear(const PrimeField& f, const IVec& coeffs) {
  SPoly r;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    fp_t c = f.reduce(coeffs[i]);
    if (!c) continue;
    Expo e{0, 0, 0};
    e[i] = 1;
    r.t[e] = c;
  }
  return r;
}

static void add_term(const PrimeField& f, SPoly& r, const Expo& e, fp_t c) {
  if (!c) return;
  auto it = r.t.find(e);
  if (it == r.t.end()) {
    r.t[e] = c;
  } else {
    it->second = f.add(it->second, c);
    if (!it->second) r.t.erase(it);
  }
}

SPoly sp_add(const PrimeField& f, const SPoly& a, const SPoly& b) {
  SPoly r = a;
  for (const auto& [e, c] : b.t) add_term(f, r, e, c);
  return r;
}

SPoly sp_sub(const PrimeField& f, const SPoly& a, const SPoly& b) {
  SPoly r = a;
  for (const auto& [e, c] : b.t) add_term(f, r, e, f.neg(c));
  return r;
}

SPoly sp_scale(const PrimeField& f, fp_t c, const SPoly& a) {
  SPoly r;
  c %= f.p;
  if (!c) return r;
  for (const auto& [e, x] : a.t) r.t[e] = f.mul(c, x);
  return r;
}

SPoly sp_mul_mono(const PrimeField& f, const SPoly& a, const Expo& m, fp_t c) {
  SPoly r;
  c %= f.p;
  if (!c) return r;
  for (const auto& [e, x] : a.t) {
    Expo e2;
    for (int i = 0; i < kMaxRank; ++i)
      e2[i] = static_cast<uint8_t>(e[i] + m[i]);
    r.t[e2] = f.mul(c, x);
  }
  return r;
}

SPoly sp_mul(const PrimeField& f, const SPoly& a, const SPoly& b) {
  SPoly r;
  for (const auto& [e, c] : b.t) {
    SPoly part = sp_mul_mono(f, a, e, c);
    for (const auto& [e2, c2] : part.t) add_term(f, r, e2, c2);
  }
  return r;
}

SPoly sp_pow(const PrimeField& f, const SPoly& a, int e) {
  SPoly r = sp_const(f, 1);
  for (int i = 0; i < e; ++i) r = sp_mul(f, r, a);
  return r;
}

SPoly reduce_mod_linear(const PrimeField& f, const SPoly& a, const IVec& ell) {
  int piv = -1;
  for (size_t i = 0; i < ell.size(); ++i)
    if (f.reduce(ell[i]) != 0) {
      piv = static_cast<int>(i);
      break;
    }
  ALC_CHECK(piv >= 0, "zero linear form in reduce_mod_linear");
  // v_piv = -(1/c_piv) * sum_{j != piv} c_j v_j
  fp_t ci = f.inv(f.reduce(ell[piv]));
  SPoly subst;
  for (size_t j = 0; j < ell.size(); ++j) {
    if (static_cast<int>(j) == piv) continue;
    fp_t c = f.reduce(ell[j]);
    if (!c) continue;
    Expo e{0, 0, 0};
    e[j] = 1;
    subst.t[e] = f.neg(f.mul(ci, c));
  }
  SPoly r;
  for (const auto& [e, c] : a.t) {
    Expo rest = e;
    int k = rest[piv];
    rest[piv] = 0;
    SPoly term = sp_mul_mono(f, sp_pow(f, subst, k), rest, c);
    r = sp_add(f, r, term);
  }
  return r;
}

static Expo lead_expo(const SPoly& a) { return a.t.rbegin()->first; }

SPoly division_remainder(const PrimeField& f, const SPoly& a, const SPoly& g) {
  ALC_CHECK(!g.zero(), "division by zero polynomial");
  SPoly r;
  SPoly work = a;
  Expo lg = lead_expo(g);
  fp_t lc_inv = f.inv(g.t.rbegin()->second);
  while (!work.zero()) {
    Expo lw = lead_expo(work);
    bool divisible = true;
    Expo q{0, 0, 0};
    for (int i = 0; i < kMaxRank; ++i) {
      if (lw[i] < lg[i]) {
        divisible = false;
        break;
      }
      q[i] = static_cast<uint8_t>(lw[i] - lg[i]);
    }
    fp_t lc = work.t.rbegin()->second;
    if (divisible) {
      work = sp_sub(f, work, sp_mul_mono(f, g, q, f.mul(lc, lc_inv)));
    } else {
      add_term(f, r, lw, lc);
      work.t.erase(std::prev(work.t.end()));
    }
  }
  return r;
}

std::optional<SPoly> sp_exact_divide(const PrimeField& f, const SPoly& a,
                                     const SPoly& g) {
  ALC_CHECK(!g.zero(), "division by zero polynomial");
  SPoly q;
  SPoly work = a;
  Expo lg = lead_expo(g);
  fp_t lc_inv = f.inv(g.t.rbegin()->second);
  while (!work.zero()) {
    Expo lw = lead_expo(work);
    Expo m{0, 0, 0};
    for (int i = 0; i < kMaxRank; ++i) {
      if (lw[i] < lg[i]) return std::nullopt;
      m[i] = static_cast<uint8_t>(lw[i] - lg[i]);
    }
    fp_t c = f.mul(work.t.rbegin()->second, lc_inv);
    add_term(f, q, m, c);
    work = sp_sub(f, work, sp_mul_mono(f, g, m, c));
  }
  return q;
}

std::string sp_render(const SPoly& a, int rank) {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.t) {
    if (!first) os << " + ";
    first = false;
    bool coeff_shown = (c != 1) || (expo_sum(e) == 0);
    if (coeff_shown) os << c;
    bool any_var = false;
    for (int i = 0; i < rank; ++i) {
      if (!e[i]) continue;
      if (coeff_shown || any_var) os << "*";
      any_var = true;
      os << "v" << (i + 1);
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

const std::vector<Expo>& mono_basis(int rank, int m) {
  static std::map<std::pair<int, int>, std::vector<Expo>> cache;
  auto key = std::make_pair(rank, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Expo> out;
  if (m >= 0) {
    Expo e{0, 0, 0};
    // lex ascending enumeration of compositions of m into `rank` parts
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == rank - 1) {
        e[pos] = static_cast<uint8_t>(rem);
        out.push_back(e);
        e[pos] = 0;
        return;
      }
      for (int k = 0; k <= rem; ++k) {
        e[pos] = static_cast<uint8_t>(k);
        rec(pos + 1, rem - k);
      }
      e[pos] = 0;
    };
    if (rank > 0) rec(0, m);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int mono_index(int rank, int m, const Expo& e) {
  const auto& b = mono_basis(rank, m);
  auto it = std::lower_bound(b.begin(), b.end(), e);
  ALC_CHECK(it != b.end() && *it == e, "monomial not in basis");
  return static_cast<int>(it - b.begin());
}

int LocElem::degree_if_homogeneous() const {
  if (num.zero()) return -1;
  int d = num.degree_if_homogeneous();
  for (const auto& [idx, e] : den) d -= 2 * e;
  return d;
}

bool LocCtx::is_invertible(int r) const {
  return std::binary_search(invertible.begin(), invertible.end(), r);
}

LocElem loc_from_poly(SPoly p) { return LocElem{std::move(p), {}}; }

LocElem loc_canon(const LocCtx& c, LocElem a) {
  if (a.num.zero()) return LocElem{};
  for (auto it = a.den.begin(); it != a.den.end();) {
    while (it->second > 0) {
      auto q = sp_exact_divide(*c.f, a.num, c.coroot[it->first]);
      if (!q) break;
      a.num = *q;
      --it->second;
    }
    if (it->second == 0)
      it = a.den.erase(it);
    else
      ++it;
  }
  return a;
}

LocElem loc_add(const LocCtx& c, const LocElem& a, const LocElem& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  LocElem out;
  SPoly na = a.num, nb = b.num;
  std::map<int, int> den;
  for (const auto& [r, e] : a.den) den[r] = e;
  for (const auto& [r, e] : b.den) den[r] = std::max(den[r], e);
  for (const auto& [r, e] : den) {
    auto ita = a.den.find(r);
    int ea = ita == a.den.end() ? 0 : ita->second;
    auto itb = b.den.find(r);
    int eb = itb == b.den.end() ? 0 : itb->second;
    for (int k = ea; k < e; ++k) na = sp_mul(*c.f, na, c.coroot[r]);
    for (int k = eb; k < e; ++k) nb = sp_mul(*c.f, nb, c.coroot[r]);
  }
  out.num = sp_add(*c.f, na, nb);
  out.den = std::move(den);
  return loc_canon(c, out);
}

LocElem loc_scale(const LocCtx& c, fp_t k, const LocElem& a) {
  (void)c;
  LocElem out;
  out.num = sp_scale(*c.f, k, a.num);
  if (!out.num.zero()) out.den = a.den;
  return out;
}

LocElem loc_mul(const LocCtx& c, const LocElem& a, const LocElem& b) {
  LocElem out;
  out.num = sp_mul(*c.f, a.num, b.num);
  if (out.num.zero()) return LocElem{};
  out.den = a.den;
  for (const auto& [r, e] : b.den) out.den[r] += e;
  return loc_canon(c, out);
}

std::optional<LocElem> loc_exact_divide(const LocCtx& c, const LocElem& a,
                                        const LocElem& b) {
  ALC_CHECK(!b.zero(), "division by zero");
  if (a.zero()) return LocElem{};
  LocElem out;
  out.num = a.num;
  out.den = a.den;
  // dividing by the denominator of b multiplies by it
  SPoly extra = sp_const(*c.f, 1);
  for (const auto& [r, e] : b.den)
    for (int k = 0; k < e; ++k) extra = sp_mul(*c.f, extra, c.coroot[r]);
  out.num = sp_mul(*c.f, out.num, extra);
  // strip invertible coroot factors from the divisor into the denominator
  SPoly divisor = b.num;
  for (int r : c.invertible) {
    while (true) {
      auto q = sp_exact_divide(*c.f, divisor, c.coroot[r]);
      if (!q) break;
      divisor = *q;
      out.den[r] += 1;
    }
  }
  // what is left is coprime to the invertible coroots, so divisibility in
  // the localization is exact divisibility of the numerator in S
  auto q = sp_exact_divide(*c.f, out.num, divisor);
  if (!q) return std::nullopt;
  out.num = *q;
  return loc_canon(c, out);
}

std::string loc_render(const LocCtx& c, const LocElem& a, int rank) {
  std::string s = sp_render(a.num, rank);
  if (a.den.empty()) return s;
  std::string d;
  for (const auto& [r, e] : a.den) {
    if (!d.empty()) d += "*";
    d += "(" + sp_render(c.coroot[r], rank) + ")";
    if (e > 1) d += "^" + std::to_string(e);
  }
  return "(" + s + ")/(" + d + ")";
}

}  // namespace alcove
