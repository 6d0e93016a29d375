#include "alcove/base_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace alcove {

bool BaseRing::is_inverted(int r) const {
  return std::binary_search(inverted.begin(), inverted.end(), r);
}

uint32_t BaseRing::inverted_mask() const {
  uint32_t m = 0;
  for (int r : inverted) m |= 1u << r;
  return m;
}

std::string BaseRing::describe(const RootSystem& rs) const {
  std::ostringstream os;
  os << "T(p=" << p << ", inverted={";
  for (size_t i = 0; i < inverted.size(); ++i) {
    if (i) os << ",";
    os << root_name(rs, inverted[i]);
  }
  os << "})";
  if (generic)
    os << " generic";
  else if (subgeneric_root)
    os << " subgeneric at " << root_name(rs, *subgeneric_root);
  return os.str();
}

BaseRing make_base_ring(const RootSystem& rs, uint32_t p,
                        const std::vector<int>& inverted) {
  GkmReport g = gkm_check(rs, p);
  if (!g.ok)
    throw AlcoveError("base ring rejected: " + g.describe(rs));
  BaseRing t;
  t.p = p;
  t.inverted = inverted;
  std::sort(t.inverted.begin(), t.inverted.end());
  t.inverted.erase(std::unique(t.inverted.begin(), t.inverted.end()),
                   t.inverted.end());
  for (int r : t.inverted)
    ALC_CHECK(r >= 0 && r < rs.npos(), "bad root index in inverted set");
  for (int r = 0; r < rs.npos(); ++r)
    if (!t.is_inverted(r)) t.not_inverted.push_back(r);

  // R_T^+ = reflections contained in the subgroup generated by
  // { s_beta : beta in I_T }, by finite closure in W.
  std::set<int> sub{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(sub.begin(), sub.end());
    for (int a : cur)
      for (int r : t.not_inverted) {
        int b = rs.mul[a][rs.refl[r]];
        if (sub.insert(b).second) grew = true;
      }
  }
  for (int r = 0; r < rs.npos(); ++r)
    if (sub.count(rs.refl[r])) t.refl_closure.push_back(r);

  if (!t.saturated()) {
    std::vector<int> extra;
    std::set_difference(t.refl_closure.begin(), t.refl_closure.end(),
                        t.not_inverted.begin(), t.not_inverted.end(),
                        std::back_inserter(extra));
    std::ostringstream os;
    os << "base ring descriptor is not saturated: reflection at "
       << root_name(rs, extra.front())
       << " lies in the subgroup generated by the non-inverted roots";
    throw AlcoveError(os.str());
  }
  t.generic = t.refl_closure.empty();
  if (t.refl_closure.size() == 1) t.subgeneric_root = t.refl_closure.front();
  return t;
}

std::vector<BaseRing> specializations(const RootSystem& rs,
                                      const BaseRing& t) {
  std::vector<BaseRing> out;
  std::vector<int> all(rs.npos());
  for (int r = 0; r < rs.npos(); ++r) all[r] = r;
  out.push_back(make_base_ring(rs, t.p, all));  // T^empty
  for (int a = 0; a < rs.npos(); ++a) {
    std::vector<int> u = t.inverted;  // keep what T already inverts
    for (int r = 0; r < rs.npos(); ++r)
      if (r != a && !t.is_inverted(r)) u.push_back(r);
    out.push_back(make_base_ring(rs, t.p, u));  // T^alpha
  }
  return out;
}

bool hom_exists(const BaseRing& t, const BaseRing& t2) {
  return std::includes(t2.inverted.begin(), t2.inverted.end(),
                       t.inverted.begin(), t.inverted.end());
}

std::string root_name(const RootSystem& rs, int rootIdx) {
  const IVec& c = rs.positive[rootIdx].root;
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rs.rank; ++i) {
    if (!c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (c[i] != 1) os << c[i];
    os << "a" << (i + 1);
  }
  return os.str();
}

int parse_root(const RootSystem& rs, const std::string& name) {
  for (int r = 0; r < rs.npos(); ++r)
    if (root_name(rs, r) == name) return r;
  throw AlcoveError("unknown root name: " + name);
}

std::vector<int> parse_inverted_spec(const RootSystem& rs,
                                     const std::string& spec) {
  std::vector<int> out;
  if (spec == "none" || spec.empty()) return out;
  if (spec == "all") {
    for (int r = 0; r < rs.npos(); ++r) out.push_back(r);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_root(rs, item));
  return out;
}

}  // namespace alcove
