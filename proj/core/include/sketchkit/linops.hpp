#pragma once

#include "sketchkit/dense.hpp"
#include "sketchkit/sparse.hpp"

// Uniform kernel surface so the sketching drivers can be written once
// and instantiated for dense and sparse inputs.

namespace sketchkit {

inline DenseMatrix apply(const DenseMatrix& a, const DenseMatrix& x) { return a * x; }
inline DenseMatrix apply(const SparseMatrix& a, const DenseMatrix& x) { return spmm(a, x); }

inline DenseMatrix apply_transpose(const DenseMatrix& a, const DenseMatrix& x) {
  return a.transpose() * x;
}
inline DenseMatrix apply_transpose(const SparseMatrix& a, const DenseMatrix& x) {
  return spmm_t(a, x);
}

inline Eigen::Index mat_rows(const DenseMatrix& a) { return a.rows(); }
inline Eigen::Index mat_rows(const SparseMatrix& a) { return a.rows(); }
inline Eigen::Index mat_cols(const DenseMatrix& a) { return a.cols(); }
inline Eigen::Index mat_cols(const SparseMatrix& a) { return a.cols(); }

}  // namespace sketchkit
