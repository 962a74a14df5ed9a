#pragma once

#include <span>
#include <vector>

#include "sketchkit/dense.hpp"

namespace sketchkit {

struct Triplet {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  double value = 0.0;
};

/// Compressed sparse row storage in canonical form: row_offsets is
/// non-decreasing with row_offsets[rows] == nnz, and column indices are
/// strictly increasing within each row (duplicates summed on build).
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// Builds canonical CSR; duplicate (i, j) entries are summed.
  /// Out-of-range indices raise IngestError naming the triplet.
  static SparseMatrix from_triplets(Eigen::Index rows, Eigen::Index cols,
                                    std::span<const Triplet> triplets);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index nnz() const { return static_cast<Eigen::Index>(values_.size()); }

  std::span<const Eigen::Index> row_offsets() const { return row_offsets_; }
  std::span<const Eigen::Index> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

  std::vector<Triplet> to_triplets() const;
  DenseMatrix to_dense() const;
  SparseMatrix transposed() const;

 private:
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<Eigen::Index> row_offsets_ = {0};
  std::vector<Eigen::Index> col_indices_;
  std::vector<double> values_;
};

/// a * x for dense x (requires a.cols() == x.rows()).
DenseMatrix spmm(const SparseMatrix& a, const DenseMatrix& x);

/// a^T * x without materializing the transpose (requires a.rows() == x.rows()).
DenseMatrix spmm_t(const SparseMatrix& a, const DenseMatrix& x);

double fro_norm_sq(const SparseMatrix& a);
double norm_one(const SparseMatrix& a);
double norm_inf(const SparseMatrix& a);

}  // namespace sketchkit
