#include "alcove/linalg.hpp"

#include <algorithm>

namespace alcove {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpVec RowBasis::residue(const FpVec& v, FpVec* comb_rows) const {
  FpVec r = v;
  if (comb_rows) comb_rows->assign(rows_.size(), 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    fp_t c = r[pivots_[i]];
    if (c == 0) continue;
    if (comb_rows) (*comb_rows)[i] = c;
    for (int j = 0; j < width_; ++j)
      r[j] = f_.sub(r[j], f_.mul(c, rows_[i][j]));
  }
  return r;
}

bool RowBasis::insert(const FpVec& v) {
  ALC_CHECK(static_cast<int>(v.size()) == width_, "row width mismatch");
  FpVec comb;
  FpVec r = residue(v, track_ ? &comb : nullptr);
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (r[j] != 0) {
      piv = j;
      break;
    }
  int my_index = n_inserted_++;
  if (piv < 0) return false;

  fp_t ci = f_.inv(r[piv]);
  for (int j = 0; j < width_; ++j) r[j] = f_.mul(r[j], ci);

  FpVec e;
  if (track_) {
    // residue = v - sum comb_i row_i, so new row = ci*(v - sum comb_i row_i).
    e.assign(n_inserted_, 0);
    e[my_index] = ci;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (comb[i] == 0) continue;
      fp_t c = f_.mul(ci, comb[i]);
      for (size_t k = 0; k < exprs_[i].size(); ++k)
        e[k] = f_.sub(e[k], f_.mul(c, exprs_[i][k]));
    }
    for (auto& ex : exprs_) ex.resize(n_inserted_, 0);
  }

  // Back-substitute into existing rows to keep the basis fully reduced.
  for (size_t i = 0; i < rows_.size(); ++i) {
    fp_t c = rows_[i][piv];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j)
      rows_[i][j] = f_.sub(rows_[i][j], f_.mul(c, r[j]));
    if (track_)
      for (int k = 0; k < n_inserted_; ++k)
        exprs_[i][k] = f_.sub(exprs_[i][k], f_.mul(c, e[k]));
  }

  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, piv);
  if (track_) exprs_.insert(exprs_.begin() + pos, std::move(e));
  return true;
}

bool RowBasis::contains(const FpVec& v) const {
  FpVec r = residue(v);
  return std::all_of(r.begin(), r.end(), [](fp_t x) { return x == 0; });
}

std::optional<FpVec> RowBasis::coords_in_basis(const FpVec& v) const {
  FpVec comb(rows_.size(), 0);
  FpVec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    fp_t c = r[pivots_[i]];
    comb[i] = c;
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j)
      r[j] = f_.sub(r[j], f_.mul(c, rows_[i][j]));
  }
  for (fp_t x : r)
    if (x != 0) return std::nullopt;
  return comb;
}

FpMat nullspace(const PrimeField& f, const FpMat& a, int width) {
  // Columns are unknowns; eliminate to find free columns.
  FpMat m = a;
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < width && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    fp_t ci = f.inv(m[row][col]);
    for (int j = 0; j < width; ++j) m[row][j] = f.mul(m[row][j], ci);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      fp_t c = m[i][col];
      for (int j = 0; j < width; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(c, m[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(width, false);
  for (int c : pivot_col) is_pivot[c] = true;
  FpMat basis;
  for (int col = 0; col < width; ++col) {
    if (is_pivot[col]) continue;
    FpVec v(width, 0);
    v[col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = f.neg(m[i][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of(const PrimeField& f, const FpMat& rows, int width) {
  RowBasis b(f, width);
  for (const auto& r : rows) b.insert(r);
  return b.dim();
}

FpMat intersect_rowspaces(const PrimeField& f, const FpMat& a, const FpMat& b,
                          int width) {
  // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half give the
  // intersection in the right half.
  int w2 = 2 * width;
  RowBasis basis(f, w2);
  for (const auto& r : a) {
    FpVec v(w2, 0);
    for (int j = 0; j < width; ++j) v[j] = v[width + j] = r[j];
    basis.insert(v);
  }
  for (const auto& r : b) {
    FpVec v(w2, 0);
    for (int j = 0; j < width; ++j) v[j] = r[j];
    basis.insert(v);
  }
  FpMat out;
  for (int i = 0; i < basis.dim(); ++i) {
    const FpVec& v = basis.row(i);
    bool left_zero = true;
    for (int j = 0; j < width; ++j)
      if (v[j] != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    FpVec r(v.begin() + width, v.end());
    out.push_back(std::move(r));
  }
  return out;
}

bool rowspace_contains(const PrimeField& f, const FpMat& space, int width,
                       const FpMat& vectors) {
  RowBasis b(f, width);
  for (const auto& r : space) b.insert(r);
  for (const auto& v : vectors)
    if (!b.contains(v)) return false;
  return true;
}

FpVec apply_rows(const PrimeField& f, const FpMat& m, const FpVec& x,
                 int width) {
  FpVec out(width, 0);
  ALC_CHECK(m.size() == x.size(), "apply_rows size mismatch");
  for (size_t i = 0; i < m.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < width; ++j)
      out[j] = f.add(out[j], f.mul(x[i], m[i][j]));
  }
  return out;
}

FpMat mat_mul(const PrimeField& f, const FpMat& a, const FpMat& b, int width) {
  FpMat out;
  out.reserve(a.size());
  for (const auto& r : a) out.push_back(apply_rows(f, b, r, width));
  return out;
}

}  // namespace alcove
