#include "qgan/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace qgan {

Dataset sample_gaussian(const GaussianSpec& spec, int n, std::uint64_t seed) {
  if (n < 1) {
    throw ValidationError("sample_gaussian: n must be >= 1");
  }
  if (spec.covariance.dim() != spec.dim()) {
    throw DimensionError("sample_gaussian: mean/covariance dimension mismatch");
  }
  const int d = spec.dim();
  const Matrix root = sqrt_psd(spec.covariance).mat();

  Rng rng(seed);
  Dataset out;
  out.seed = seed;
  out.samples.resize(n, d);
  Vector z(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      z(j) = rng.normal();
    }
    out.samples.row(i) = (root * z + spec.mean).transpose();
  }
  return out;
}

SymMatrix sample_covariance(const Dataset& data) {
  if (data.n() < 2) {
    throw ValidationError("sample_covariance: need at least two observations");
  }
  const Eigen::RowVectorXd mean = data.samples.colwise().mean();
  const Matrix centered = data.samples.rowwise() - mean;
  return SymMatrix((centered.transpose() * centered) /
                   static_cast<double>(data.n()));
}

SymMatrix r_pca(const SymMatrix& k, int r) {
  const int d = k.dim();
  if (r < 1 || r > d) {
    throw ValidationError("r_pca: rank must satisfy 1 <= r <= dim");
  }
  if (r == d) {
    return k;
  }
  SpectralDecomp dec = eig_sym(k);
  const Matrix top = dec.eigenvectors.leftCols(r);
  return SymMatrix(top * dec.eigenvalues.head(r).asDiagonal() *
                   top.transpose());
}

SymMatrix random_covariance(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw ValidationError("random_covariance: dim must be >= 1");
  }
  Rng rng(seed);
  Matrix w(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      w(i, j) = rng.normal();
    }
  }
  Vector sigma(dim);
  for (int i = 0; i < dim; ++i) {
    sigma(i) = rng.uniform(0.0, 10.0);
  }
  Matrix m = w * sigma.asDiagonal() * w.transpose();
  const double norm = m.norm();
  if (norm > 0.0) {
    m /= norm;
  }
  return SymMatrix(m);
}

double gaussian_w2_sq(const SymMatrix& k1, const SymMatrix& k2) {
  if (k1.dim() != k2.dim()) {
    throw DimensionError("gaussian_w2_sq: dimension mismatch");
  }
  const Matrix root1 = sqrt_psd(k1).mat();
  const SymMatrix inner(root1 * k2.mat() * root1);
  const double cross = sqrt_psd(inner).trace();
  const double value = k1.trace() + k2.trace() - 2.0 * cross;
  return std::max(value, 0.0);
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("frobenius_distance: dimension mismatch");
  }
  return (a.mat() - b.mat()).norm();
}

}  // namespace qgan
