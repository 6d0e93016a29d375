#pragma once

// Root systems of irreducible type and rank <= 3 with their finite Weyl
// groups. Coordinates are integral throughout:
//   roots      - simple-root basis
//   coroots    - simple-coroot basis
//   weights    - fundamental-weight basis   (<lambda, alpha_j^vee> = l_j)
//   coweights  - fundamental-coweight basis (<alpha_i, v> = m_i)
// cartan[i][j] = <alpha_i, alpha_j^vee>.

#include <string>
#include <vector>

#include "alcove/poly.hpp"

namespace alcove {

using IMat = std::vector<IVec>;

enum class RSType { A1, A2, B2, G2, A3 };

RSType parse_type(const std::string& s);
std::string type_name(RSType t);

struct PosRoot {
  IVec root;    // simple-root coordinates
  IVec coroot;  // simple-coroot coordinates
};

struct WeylElem {
  IMat on_root;    // action on V, simple-root basis
  IMat on_weight;  // action on V, fundamental-weight basis
  IMat on_cowt;    // action on V*, fundamental-coweight basis
  IMat on_coroot;  // action on V*, simple-coroot basis
  std::vector<int> word;  // reduced word in simple reflections (0-based)
};

struct RootSystem {
  RSType type;
  int rank;
  IMat cartan;
  std::vector<PosRoot> positive;  // simple roots first, then by closure
  std::vector<WeylElem> w;        // index 0 = identity; BFS by word length
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of w_a * w_b
  std::vector<int> inv;               // inverse index
  std::vector<int> refl;              // refl[r] = index of s_{alpha_r}
  int highest_coroot_root = -1;  // positive root whose coroot is highest
  IVec bary_num;                 // barycenter of A_e, weight coords * bary_den
  long bary_den = 1;

  int order() const { return static_cast<int>(w.size()); }
  int npos() const { return static_cast<int>(positive.size()); }
  // coweight coordinates of a coroot: cartan * coroot
  IVec coroot_cowt(int r) const;
  // weight coordinates of a root: cartan^T * root
  IVec root_weight(int r) const;
  std::string word_name(int wi) const;  // "e", "s1", "s1s2", ...
};

RootSystem build_root_system(RSType t);

// <beta, h> for beta a positive root and h in coweight coordinates.
long pair_root_cowt(const RootSystem& rs, int rootIdx, const IVec& h);

// s_beta(h) = h - <beta,h> beta^vee, h in coweight coordinates.
IVec reflect_coweight(const RootSystem& rs, int rootIdx, const IVec& h);

IVec apply_mat(const IMat& m, const IVec& v);

struct GkmReport {
  bool ok = false;
  bool char_two = false;
  std::vector<std::pair<int, int>> dependent_pairs;  // root indices
  std::string describe(const RootSystem& rs) const;
};

// char k != 2 and pairwise linear independence of positive coroots mod p.
GkmReport gkm_check(const RootSystem& rs, uint32_t p);

}  // namespace alcove
