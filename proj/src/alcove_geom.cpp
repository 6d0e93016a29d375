#include "alcove/alcove_geom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace alcove {

AffElem aff_identity(const RootSystem& rs) {
  return {IVec(rs.rank, 0), 0};
}

AffElem aff_translation(const IVec& gamma) { return {gamma, 0}; }

AffElem aff_reflection(const RootSystem& rs, int rootIdx, long n) {
  IVec g = rs.positive[rootIdx].root;
  for (auto& x : g) x *= n;
  return {g, rs.refl[rootIdx]};
}

AffElem aff_mul(const RootSystem& rs, const AffElem& a, const AffElem& b) {
  // t_g1 w1 t_g2 w2 = t_{g1 + w1(g2)} w1 w2
  IVec g = apply_mat(rs.w[a.w].on_root, b.gamma);
  for (int i = 0; i < rs.rank; ++i) g[i] += a.gamma[i];
  return {std::move(g), rs.mul[a.w][b.w]};
}

AffElem aff_inv(const RootSystem& rs, const AffElem& a) {
  int wi = rs.inv[a.w];
  IVec g = apply_mat(rs.w[wi].on_root, a.gamma);
  for (auto& x : g) x = -x;
  return {std::move(g), wi};
}

IVec barycenter_num(const RootSystem& rs, const Alcove& a) {
  IVec out = apply_mat(rs.w[a.w].on_weight, rs.bary_num);
  // add bary_den * (weight coordinates of gamma)
  for (int j = 0; j < rs.rank; ++j) {
    long wj = 0;
    for (int i = 0; i < rs.rank; ++i) wj += rs.cartan[i][j] * a.gamma[i];
    out[j] += rs.bary_den * wj;
  }
  return out;
}

long alcove_pairing_num(const RootSystem& rs, const Alcove& a, int rootIdx) {
  IVec b = barycenter_num(rs, a);
  long s = 0;
  for (int i = 0; i < rs.rank; ++i) s += b[i] * rs.positive[rootIdx].coroot[i];
  return s;
}

int side(const RootSystem& rs, const Alcove& a, int rootIdx, long n) {
  long v = alcove_pairing_num(rs, a, rootIdx) - n * rs.bary_den;
  ALC_CHECK(v != 0, "alcove barycenter on a reflection hyperplane");
  return v > 0 ? 1 : -1;
}

std::vector<SimpleRef> simple_affine_reflections(const RootSystem& rs) {
  std::vector<SimpleRef> out;
  for (int i = 0; i < rs.rank; ++i) {
    std::ostringstream nm;
    nm << "s" << (i + 1);
    out.push_back({aff_reflection(rs, i, 0), i, nm.str()});
  }
  int hr = rs.highest_coroot_root;
  out.push_back({aff_reflection(rs, hr, 1), hr, "s0"});
  return out;
}

std::vector<Alcove> enumerate_box(const RootSystem& rs, long radius) {
  ALC_CHECK(radius >= 1, "window radius must be >= 1");
  const int n = rs.rank;
  // Bound the gamma search box: |<gamma, alpha_i^vee>| <= radius + 1 gives
  // |c| <= |adj(C)^T y| / |det C| componentwise.
  IMat c = rs.cartan;
  long det = 0;
  IMat adj(n, IVec(n, 0));
  if (n == 1) {
    det = c[0][0];
    adj[0][0] = 1;
  } else if (n == 2) {
    det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    adj = {{c[1][1], -c[0][1]}, {-c[1][0], c[0][0]}};
  } else {
    det = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
          c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
          c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        adj[j][i] = c[i1][j1] * c[i2][j2] - c[i1][j2] * c[i2][j1];
      }
  }
  ALC_CHECK(det != 0, "singular Cartan matrix");
  long bound = 0;
  for (int i = 0; i < n; ++i) {
    long s = 0;
    // c = C^{-T} y, so |c_i| <= sum_j |adj[j][i]| * (radius+1) / |det|
    for (int j = 0; j < n; ++j) s += std::abs(adj[j][i]);
    bound = std::max(bound, (s * (radius + 1)) / std::abs(det) + 1);
  }

  std::vector<Alcove> out;
  IVec gamma(n, 0);
  std::vector<long> idx(n, -bound);
  while (true) {
    for (int i = 0; i < n; ++i) gamma[i] = idx[i];
    for (int wi = 0; wi < rs.order(); ++wi) {
      Alcove a{gamma, wi};
      bool inside = true;
      for (int r = 0; r < rs.npos() && inside; ++r) {
        long p = alcove_pairing_num(rs, a, r);
        if (std::abs(p) > radius * rs.bary_den) inside = false;
      }
      if (inside) out.push_back(a);
    }
    int k = n - 1;
    while (k >= 0 && idx[k] == bound) {
      idx[k] = -bound;
      --k;
    }
    if (k < 0) break;
    ++idx[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string alcove_name(const RootSystem& rs, const Alcove& a) {
  std::ostringstream os;
  os << rs.word_name(a.w) << ":";
  for (int i = 0; i < rs.rank; ++i) {
    if (i) os << ",";
    os << a.gamma[i];
  }
  return os.str();
}

}  // namespace alcove
