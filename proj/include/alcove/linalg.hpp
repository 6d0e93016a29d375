#pragma once

// Dense exact linear algebra over F_p: row-echelon bases, kernels,
// subspace comparisons. Row vectors are plain FpVec of a fixed width.

#include <optional>

#include "alcove/fp.hpp"

namespace alcove {

using FpMat = std::vector<FpVec>;

// A row-reduced (echelon, pivots normalized to 1, fully back-substituted)
// basis of a subspace of F_p^width. Rows are kept sorted by pivot column.
// Optionally tracks, for every row, its expression as a combination of the
// vectors inserted so far (in insertion order).
class RowBasis {
 public:
  RowBasis(const PrimeField& f, int width, bool track = false)
      : f_(f), width_(width), track_(track) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const FpVec& row(int i) const { return rows_[i]; }
  const std::vector<FpVec>& rows() const { return rows_; }
  int pivot(int i) const { return pivots_[i]; }
  // Expression of row i in terms of inserted vectors (length = #inserted).
  const FpVec& expr(int i) const { return exprs_[i]; }
  int inserted() const { return n_inserted_; }

  // Reduces v against the basis; returns the remainder and, when tracking,
  // the combination of rows used.
  FpVec residue(const FpVec& v, FpVec* comb_rows = nullptr) const;

  // Inserts v; returns true if it enlarged the span.
  bool insert(const FpVec& v);

  bool contains(const FpVec& v) const;

  // Expresses v as a combination of the basis rows; nullopt if not in span.
  std::optional<FpVec> coords_in_basis(const FpVec& v) const;

 private:
  const PrimeField& f_;
  int width_;
  bool track_;
  int n_inserted_ = 0;
  std::vector<FpVec> rows_;
  std::vector<int> pivots_;
  std::vector<FpVec> exprs_;  // per row, in terms of inserted vectors
};

// Basis of the solution space of A x = 0 (rows of a are equations).
FpMat nullspace(const PrimeField& f, const FpMat& a, int width);

int rank_of(const PrimeField& f, const FpMat& rows, int width);

// Basis rows of the intersection of two row spaces.
FpMat intersect_rowspaces(const PrimeField& f, const FpMat& a, const FpMat& b,
                          int width);

bool rowspace_contains(const PrimeField& f, const FpMat& space, int width,
                       const FpMat& vectors);

// Matrix-vector application: rows r of m are images of basis vectors; x given
// in basis coordinates, result = sum x_i * m_i.
FpVec apply_rows(const PrimeField& f, const FpMat& m, const FpVec& x,
                 int width);

FpMat mat_mul(const PrimeField& f, const FpMat& a, const FpMat& b, int width);

}  // namespace alcove
