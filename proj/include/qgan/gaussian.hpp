#pragma once

#include <cstdint>

#include "qgan/linalg.hpp"
#include "qgan/rng.hpp"

namespace qgan {

// A finite sample, one observation per row.
struct Dataset {
  Matrix samples;          // n x d
  std::uint64_t seed = 0;  // seed used to generate it (0 for external data)

  int n() const { return static_cast<int>(samples.rows()); }
  int dim() const { return static_cast<int>(samples.cols()); }
};

struct GaussianSpec {
  Vector mean;
  SymMatrix covariance;  // PSD

  int dim() const { return static_cast<int>(mean.size()); }
};

// n i.i.d. draws produced as K^{1/2} z + mean with z standard normal from the
// seeded stream; row i consumes d deviates in order, so the output is a pure
// function of (spec, n, seed).
Dataset sample_gaussian(const GaussianSpec& spec, int n, std::uint64_t seed);

// Mean-centered covariance with divisor n: rows are centered by the sample
// mean, then (1/n) Yc^t Yc.
SymMatrix sample_covariance(const Dataset& data);

// Keeps the top r eigenpairs of the descending spectral decomposition.
SymMatrix r_pca(const SymMatrix& k, int r);

// W Sigma W^t with W(i,j) ~ N(0,1) and Sigma(i,i) ~ Uniform(0,10), scaled to
// unit Frobenius norm. W fills row-major, then the diagonal draws follow.
SymMatrix random_covariance(int dim, std::uint64_t seed);

// Exact squared 2-Wasserstein distance between N(0, k1) and N(0, k2):
// Tr(k1) + Tr(k2) - 2 Tr((k1^{1/2} k2 k1^{1/2})^{1/2}), clipped to >= 0.
double gaussian_w2_sq(const SymMatrix& k1, const SymMatrix& k2);

double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

}  // namespace qgan
