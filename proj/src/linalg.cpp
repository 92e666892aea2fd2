#include "qgan/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace qgan {

SymMatrix::SymMatrix(const Matrix& raw) {
  if (raw.rows() != raw.cols() || raw.rows() < 1) {
    throw DimensionError("SymMatrix requires a square matrix with dim >= 1");
  }
  // (a_ij + a_ji)/2 evaluates identically for (i,j) and (j,i), so the stored
  // entries are symmetric bit-for-bit.
  m_ = 0.5 * (raw + raw.transpose());
}

SymMatrix SymMatrix::identity(int dim) {
  return SymMatrix(Matrix::Identity(dim, dim));
}

SymMatrix SymMatrix::zero(int dim) {
  return SymMatrix(Matrix::Zero(dim, dim));
}

SymMatrix SymMatrix::from_diagonal(const Vector& diag) {
  Matrix m = Matrix::Zero(diag.size(), diag.size());
  m.diagonal() = diag;
  return SymMatrix(m);
}

SpectralDecomp eig_sym(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.mat());
  if (solver.info() != Eigen::Success) {
    throw IterationError("symmetric eigensolver did not converge");
  }

  const int d = m.dim();
  SpectralDecomp out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();

  // Sign convention: the largest-magnitude component of each eigenvector is
  // positive (first such index wins on ties).
  for (int j = 0; j < d; ++j) {
    int arg = 0;
    double best = std::abs(out.eigenvectors(0, j));
    for (int i = 1; i < d; ++i) {
      const double a = std::abs(out.eigenvectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (out.eigenvectors(arg, j) < 0.0) {
      out.eigenvectors.col(j) = -out.eigenvectors.col(j);
    }
  }
  return out;
}

SymMatrix sqrt_psd(const SymMatrix& m) {
  SpectralDecomp d = eig_sym(m);
  const double lambda_max = d.eigenvalues.size() > 0 ? d.eigenvalues(0) : 0.0;
  const double hard_floor = -1e-8 * std::max(1.0, lambda_max);
  Vector roots(d.eigenvalues.size());
  for (int i = 0; i < d.eigenvalues.size(); ++i) {
    const double lambda = d.eigenvalues(i);
    if (lambda < hard_floor) {
      throw NotPsdError("sqrt_psd: eigenvalue " + std::to_string(lambda) +
                        " below PSD tolerance");
    }
    roots(i) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  return SymMatrix(d.eigenvectors * roots.asDiagonal() *
                   d.eigenvectors.transpose());
}

SymMatrix pinv_psd(const SymMatrix& m, double floor) {
  SpectralDecomp d = eig_sym(m);
  Vector inv(d.eigenvalues.size());
  for (int i = 0; i < d.eigenvalues.size(); ++i) {
    const double lambda = d.eigenvalues(i);
    inv(i) = lambda > floor ? 1.0 / lambda : 0.0;
  }
  return SymMatrix(d.eigenvectors * inv.asDiagonal() *
                   d.eigenvectors.transpose());
}

LogDet logdet_psd(const SymMatrix& m, double floor) {
  SpectralDecomp d = eig_sym(m);
  LogDet out;
  for (int i = 0; i < d.eigenvalues.size(); ++i) {
    const double lambda = d.eigenvalues(i);
    if (lambda < floor) {
      out.rank_deficient = true;
      out.value = -std::numeric_limits<double>::infinity();
      return out;
    }
    out.value += std::log(lambda);
  }
  return out;
}

Matrix orthonormal_columns(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  return q;
}

double max_principal_angle(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_principal_angle: shape mismatch");
  }
  const Matrix qa = orthonormal_columns(a);
  const Matrix qb = orthonormal_columns(b);
  Eigen::JacobiSVD<Matrix> svd(qa.transpose() * qb);
  // Smallest singular value of Qa^t Qb is the cosine of the largest angle.
  const double c = std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace qgan
