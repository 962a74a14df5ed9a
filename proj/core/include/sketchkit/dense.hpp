#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sketchkit/rng.hpp"

namespace sketchkit {

// Dense blocks, factors and small test matrices are plain column-major
// arrays of binary64 values. Column-major order is the storage contract
// everywhere in this library, including the order gaussian_matrix
// consumes its stream.
using DenseMatrix = Eigen::MatrixXd;

inline constexpr double kEpsMach = 0x1p-52;

/// rows x cols matrix of i.i.d. standard normal draws taken from `rng`
/// in storage (column-major) order. Advances the stream by rows*cols.
DenseMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, RngStream& rng);

struct QRResult {
  DenseMatrix q;  // m x n, orthonormal columns
  DenseMatrix r;  // n x n, upper triangular with non-negative diagonal
};

/// Thin Householder QR of x (requires rows >= cols). Rank-deficient
/// inputs still factor; the corresponding diagonal of r is ~0.
QRResult qr_thin(const DenseMatrix& x);

struct DeflQRResult {
  DenseMatrix q;                   // m x s, orthonormal columns
  DenseMatrix r;                   // s x n, upper trapezoidal under perm
  Eigen::Index s = 0;              // detected rank
  std::vector<Eigen::Index> perm;  // pivot order: column j of x*P is x(:, perm[j])
};

/// Householder QR with column pivoting (largest remaining 2-norm, with
/// downdated norms recomputed once they decay below sqrt(eps) of their
/// reference value), truncated at the largest s with |R(s,s)| >= delta.
/// r comes back with the pivoting undone, so x ~ q * r directly.
/// delta = 0 keeps every column; s = 0 (all of x below delta) is valid.
DeflQRResult defl_qr(const DenseMatrix& x, double delta);

/// Sum of squared entries, compensated. Empty matrices give 0.
double fro_norm_sq(const DenseMatrix& x);
double fro_norm_sq(std::span<const double> values);

/// ||q^T q - I||_2 (exact, via a symmetric eigensolve). 0 for 0 columns.
double orthonormality_defect(const DenseMatrix& q);

/// Largest singular value. 0 for empty matrices.
double spectral_norm(const DenseMatrix& m);

/// Max absolute column sum / max absolute row sum.
double norm_one(const DenseMatrix& m);
double norm_inf(const DenseMatrix& m);

}  // namespace sketchkit
