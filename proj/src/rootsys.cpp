#include "alcove/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace alcove {

RSType parse_type(const std::string& s) {
  if (s == "A1") return RSType::A1;
  if (s == "A2") return RSType::A2;
  if (s == "B2") return RSType::B2;
  if (s == "G2") return RSType::G2;
  if (s == "A3") return RSType::A3;
  throw AlcoveError("unsupported root system type: " + s +
                    " (expected A1, A2, B2, G2 or A3)");
}

std::string type_name(RSType t) {
  switch (t) {
    case RSType::A1: return "A1";
    case RSType::A2: return "A2";
    case RSType::B2: return "B2";
    case RSType::G2: return "G2";
    case RSType::A3: return "A3";
  }
  return "?";
}

static IMat cartan_of(RSType t) {
  switch (t) {
    case RSType::A1: return {{2}};
    case RSType::A2: return {{2, -1}, {-1, 2}};
    case RSType::B2: return {{2, -2}, {-1, 2}};   // alpha1 long, alpha2 short
    case RSType::G2: return {{2, -1}, {-3, 2}};   // alpha1 short, alpha2 long
    case RSType::A3: return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  }
  throw AlcoveError("bad type");
}

IVec apply_mat(const IMat& m, const IVec& v) {
  int n = static_cast<int>(m.size());
  IVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

static IMat mat_mul_i(const IMat& a, const IMat& b) {
  int n = static_cast<int>(a.size());
  IMat c(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

static IMat identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Generator matrices for the simple reflection s_i in each coordinate system.
static void simple_matrices(const IMat& c, int i, IMat& on_root,
                            IMat& on_weight, IMat& on_cowt, IMat& on_coroot) {
  int n = static_cast<int>(c.size());
  on_root = identity(n);
  on_weight = identity(n);
  on_cowt = identity(n);
  on_coroot = identity(n);
  for (int j = 0; j < n; ++j) {
    on_root[i][j] -= c[j][i];    // c'_i = c_i - sum_j C[j][i] c_j
    on_coroot[i][j] -= c[i][j];  // e'_i = e_i - sum_j C[i][j] e_j
    on_weight[j][i] -= c[i][j];  // l'_k = l_k - l_i C[i][k]
    on_cowt[j][i] -= c[j][i];    // m'_k = m_k - m_i C[k][i]
  }
}

IVec RootSystem::coroot_cowt(int r) const {
  return apply_mat(cartan, positive[r].coroot);
}

IVec RootSystem::root_weight(int r) const {
  IVec out(rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) out[j] += cartan[i][j] * positive[r].root[i];
  return out;
}

std::string RootSystem::word_name(int wi) const {
  const auto& wd = w[wi].word;
  if (wd.empty()) return "e";
  std::ostringstream os;
  for (int g : wd) os << "s" << (g + 1);
  return os.str();
}

RootSystem build_root_system(RSType t) {
  RootSystem rs;
  rs.type = t;
  rs.cartan = cartan_of(t);
  rs.rank = static_cast<int>(rs.cartan.size());
  const int n = rs.rank;

  // Positive roots by reflection closure of the simple roots.
  std::vector<PosRoot> all;
  for (int i = 0; i < n; ++i) {
    PosRoot r;
    r.root.assign(n, 0);
    r.coroot.assign(n, 0);
    r.root[i] = 1;
    r.coroot[i] = 1;
    all.push_back(r);
  }
  auto contains = [&](const IVec& root) {
    for (const auto& r : all)
      if (r.root == root) return true;
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t k = 0; k < all.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        long q = 0;  // <alpha, alpha_i^vee>
        for (int j = 0; j < n; ++j) q += all[k].root[j] * rs.cartan[j][i];
        PosRoot nr;
        nr.root = all[k].root;
        nr.coroot = all[k].coroot;
        nr.root[i] -= q;
        long q2 = 0;  // <alpha_i, alpha^vee>
        for (int j = 0; j < n; ++j) q2 += rs.cartan[i][j] * all[k].coroot[j];
        nr.coroot[i] -= q2;
        bool positive = true, negative = true;
        for (long x : nr.root) {
          if (x > 0) negative = false;
          if (x < 0) positive = false;
        }
        if (positive && !contains(nr.root)) {
          all.push_back(nr);
          grew = true;
        }
        (void)negative;
      }
    }
  }
  std::sort(all.begin() + n, all.end(), [](const PosRoot& a, const PosRoot& b) {
    long ha = std::accumulate(a.root.begin(), a.root.end(), 0L);
    long hb = std::accumulate(b.root.begin(), b.root.end(), 0L);
    if (ha != hb) return ha < hb;
    return a.root < b.root;
  });
  rs.positive = std::move(all);

  // Weyl group by BFS over simple-reflection words.
  std::vector<IMat> gr(n), gw(n), gc(n), gd(n);
  for (int i = 0; i < n; ++i)
    simple_matrices(rs.cartan, i, gr[i], gw[i], gc[i], gd[i]);
  std::map<IMat, int> seen;
  WeylElem id{identity(n), identity(n), identity(n), identity(n), {}};
  rs.w.push_back(id);
  seen[id.on_root] = 0;
  for (size_t head = 0; head < rs.w.size(); ++head) {
    WeylElem cur = rs.w[head];  // copy: rs.w may reallocate
    for (int i = 0; i < n; ++i) {
      WeylElem nx;
      nx.on_root = mat_mul_i(cur.on_root, gr[i]);
      if (seen.count(nx.on_root)) continue;
      nx.on_weight = mat_mul_i(cur.on_weight, gw[i]);
      nx.on_cowt = mat_mul_i(cur.on_cowt, gc[i]);
      nx.on_coroot = mat_mul_i(cur.on_coroot, gd[i]);
      nx.word = cur.word;
      nx.word.push_back(i);
      seen[nx.on_root] = static_cast<int>(rs.w.size());
      rs.w.push_back(std::move(nx));
    }
  }
  const int nw = rs.order();

  rs.mul.assign(nw, std::vector<int>(nw, -1));
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b) {
      IMat m = mat_mul_i(rs.w[a].on_root, rs.w[b].on_root);
      auto it = seen.find(m);
      ALC_CHECK(it != seen.end(), "Weyl group not closed under product");
      rs.mul[a][b] = it->second;
    }
  rs.inv.assign(nw, -1);
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b)
      if (rs.mul[a][b] == 0) rs.inv[a] = b;

  // Reflection index per positive root, via the matrix of s_alpha on V.
  rs.refl.assign(rs.npos(), -1);
  for (int r = 0; r < rs.npos(); ++r) {
    IMat m = identity(n);
    for (int j = 0; j < n; ++j) {
      // s_alpha(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
      long qj = 0;
      for (int k = 0; k < n; ++k)
        qj += rs.cartan[j][k] * rs.positive[r].coroot[k];
      for (int i = 0; i < n; ++i) m[i][j] -= qj * rs.positive[r].root[i];
    }
    auto it = seen.find(m);
    ALC_CHECK(it != seen.end(), "reflection not found in Weyl group");
    rs.refl[r] = it->second;
  }

  // Highest coroot (unique maximal height among positive coroots).
  long best = -1;
  for (int r = 0; r < rs.npos(); ++r) {
    long h = std::accumulate(rs.positive[r].coroot.begin(),
                             rs.positive[r].coroot.end(), 0L);
    if (h > best) {
      best = h;
      rs.highest_coroot_root = r;
    }
  }
  // Barycenter of A_e: average of 0 and the vertices w_i/m_i where
  // theta^vee = sum m_i alpha_i^vee.
  const IVec& m = rs.positive[rs.highest_coroot_root].coroot;
  long l = 1;
  for (long x : m) l = std::lcm(l, x);
  rs.bary_den = (n + 1) * l;
  rs.bary_num.assign(n, 0);
  for (int i = 0; i < n; ++i) rs.bary_num[i] = l / m[i];
  for (int r = 0; r < rs.npos(); ++r) {
    long v = 0;
    for (int i = 0; i < n; ++i) v += rs.bary_num[i] * rs.positive[r].coroot[i];
    ALC_CHECK(0 < v && v < rs.bary_den,
              "fundamental alcove barycenter out of place");
  }
  return rs;
}

long pair_root_cowt(const RootSystem& rs, int rootIdx, const IVec& h) {
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) s += rs.positive[rootIdx].root[i] * h[i];
  return s;
}

IVec reflect_coweight(const RootSystem& rs, int rootIdx, const IVec& h) {
  long q = pair_root_cowt(rs, rootIdx, h);
  IVec cv = rs.coroot_cowt(rootIdx);
  IVec out = h;
  for (int i = 0; i < rs.rank; ++i) out[i] -= q * cv[i];
  return out;
}

std::string GkmReport::describe(const RootSystem& rs) const {
  if (ok) return "GKM condition holds";
  std::ostringstream os;
  os << "GKM condition fails:";
  if (char_two) os << " characteristic 2";
  for (auto [a, b] : dependent_pairs) {
    os << " coroots of roots #" << a << " and #" << b
       << " dependent mod p";
  }
  return os.str();
}

GkmReport gkm_check(const RootSystem& rs, uint32_t p) {
  ALC_CHECK(is_prime(p), "p must be prime");
  GkmReport rep;
  if (p == 2) {
    rep.char_two = true;
    return rep;
  }
  PrimeField f(p);
  int np = rs.npos();
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      IVec va = rs.coroot_cowt(a), vb = rs.coroot_cowt(b);
      bool independent = false;
      for (int i = 0; i < rs.rank && !independent; ++i)
        for (int j = i + 1; j < rs.rank && !independent; ++j) {
          long d = va[i] * vb[j] - va[j] * vb[i];
          if (f.reduce(d) != 0) independent = true;
        }
      if (!independent) rep.dependent_pairs.emplace_back(a, b);
    }
  }
  rep.ok = !rep.char_two && rep.dependent_pairs.empty();
  return rep;
}

}  // namespace alcove
