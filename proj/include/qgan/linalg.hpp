#pragma once

#include <Eigen/Dense>

#include "qgan/errors.hpp"

namespace qgan {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dense symmetric matrix. Entries are symmetrized exactly on construction,
// i.e. entries(i,j) == entries(j,i) bit-for-bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& raw);

  static SymMatrix identity(int dim);
  static SymMatrix zero(int dim);
  static SymMatrix from_diagonal(const Vector& diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }

 private:
  Matrix m_;
};

// Eigendecomposition with eigenvalues sorted descending, orthonormal
// eigenvector columns, and a fixed sign convention (largest-magnitude
// component of each eigenvector is positive) so output is reproducible.
struct SpectralDecomp {
  Vector eigenvalues;   // non-increasing
  Matrix eigenvectors;  // column i pairs with eigenvalues[i]

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
  }
};

// Result of a spectral log-determinant; rank_deficient marks eigenvalues
// below the floor, where the value is -infinity.
struct LogDet {
  double value = 0.0;
  bool rank_deficient = false;
};

// Default eigenvalue floor relative to the spectral radius.
inline double default_floor(double lambda_max) {
  return 1e-12 * std::max(1.0, lambda_max);
}

SpectralDecomp eig_sym(const SymMatrix& m);

// PSD square root computed spectrally. Eigenvalues in [-1e-10, 0) are treated
// as rounding noise and clipped to zero; anything below
// -1e-8 * max(1, lambda_max) raises NotPsdError.
SymMatrix sqrt_psd(const SymMatrix& m);

// Moore-Penrose pseudoinverse of a PSD matrix. Eigenvalues <= floor contribute
// zero; the floor policy makes this total on PSD inputs.
SymMatrix pinv_psd(const SymMatrix& m, double floor);

// Tr[log M] = log det M computed spectrally. Eigenvalues below the floor set
// rank_deficient and drive the value to -infinity.
LogDet logdet_psd(const SymMatrix& m, double floor);

// Thin orthonormal basis for the column span of a full-column-rank matrix.
Matrix orthonormal_columns(const Matrix& m);

// Largest principal angle (radians) between the column spans of a and b.
// Both must have the same number of columns and full column rank.
double max_principal_angle(const Matrix& a, const Matrix& b);

}  // namespace qgan
