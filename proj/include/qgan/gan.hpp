#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgan/gaussian.hpp"
#include "qgan/linalg.hpp"

namespace qgan {

// The generator is a plain d x r matrix (a column vector when r = 1); the
// discriminator is a d x d matrix H acting through its Gram matrix H H^t.

enum class Algorithm { kAltGd, kAltGdGram, kPrimal, kSubspace };
enum class Init { kRandomGaussian, kIdentity, kPsdRandom, kExplicit };
enum class StopReason { kNone, kToleranceReached, kGradientStationary, kMaxIters };

struct TrainConfig {
  Algorithm algorithm = Algorithm::kAltGd;
  int rank = -1;  // generator rank r; -1 means full rank (r = d)
  double lr_g = 1e-2;
  double lr_h = 1e-2;
  int steps_g = 1;  // generator steps per round
  int steps_h = 1;  // discriminator steps per round
  long max_iters = 200000;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  double eig_floor = 1e-12;
  Init init = Init::kRandomGaussian;
  Matrix init_g;  // used when init == kExplicit
  Matrix init_h;
  long record_stride = 1;

  void validate() const;  // throws ValidationError
};

struct TrajectoryPoint {
  long iter = 0;
  double objective = 0.0;
  double lyapunov = 0.0;  // NaN when !lyapunov_defined
  bool lyapunov_defined = false;
  double frob_err = 0.0;  // ||G G^t - target||_F with target = r_pca(K, r)
  double w2_sq = 0.0;     // squared W2 between N(0, G G^t) and N(0, target)
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;  // strictly increasing in iter
  Matrix final_g;
  Matrix final_h;  // for the Gram solver these are PSD roots of (U, A)
  bool converged = false;
  long iters_used = 0;
  StopReason stop_reason = StopReason::kNone;
  bool low_rank_regime = false;  // alternating run with r < d

  // Subspace-method extras (empty / zero for the other solvers).
  Matrix subspace;              // final d x r orthonormal basis
  double subspace_trace = 0.0;  // Tr[S^t K S] at the final basis
  long outer_iters = 0;
};

// Objective J = Tr[(I - H H^t) K] - Tr[((H H^t)^+ - I) G G^t].
double objective(const Matrix& g, const Matrix& h, const SymMatrix& k,
                 double floor);

// dJ/dG = 2 (I - (H H^t)^+) G.
Matrix generator_gradient(const Matrix& g, const Matrix& h, const SymMatrix& k,
                          double floor);

// dJ/dH = -2 K H + 2 A^+ (G G^t) A^+ H with A = H H^t; reduces to
// -2 K H + 2 A^{-1} G G^t H^{-t} for invertible H.
Matrix discriminator_gradient(const Matrix& g, const Matrix& h,
                              const SymMatrix& k, double floor);

struct LyapunovValue {
  double value = 0.0;
  bool defined = false;  // false when a Gram matrix is rank deficient
};

// Sum of the two log-det divergences Tr[M - I - log M] for M in {U, A}.
// Nonnegative; zero exactly when U = A = I.
LyapunovValue lyapunov_gram(const SymMatrix& u, const SymMatrix& a,
                            double floor);
LyapunovValue lyapunov(const Matrix& g, const Matrix& h, double floor);

// Maximizing discriminator for a fixed generator: the PSD root of
// K^{-1/2} (K^{1/2} G G^t K^{1/2})^{1/2} K^{-1/2}. Requires K full rank.
Matrix optimal_discriminator(const Matrix& g, const SymMatrix& k,
                             double floor);

// Inner maximum in closed form: h(G) = Tr[K + G G^t
// - 2 (K^{1/2} G G^t K^{1/2})^{1/2}], which equals the squared W2 distance
// between N(0, G G^t) and N(0, K).
double primal_objective(const Matrix& g, const SymMatrix& k);

// Alternating gradient descent/ascent on (G, H): steps_g generator descent
// steps then steps_h discriminator ascent steps per recorded round.
Trajectory alternating_gd(const SymMatrix& k, const TrainConfig& cfg);

// Alternating descent/ascent directly on the Gram pair (U, A) with a PSD
// projection (eigenvalues clipped up to eig_floor) after every update.
// Requires full rank.
Trajectory alternating_gd_gram(const SymMatrix& k, const TrainConfig& cfg);

// Gradient descent on the closed-form objective with update direction
// 2 (G - K^{1/2}); requires a symmetric PSD initialization and keeps the
// iterate symmetric PSD (asserted each step).
Trajectory primal_descent(const SymMatrix& k, const TrainConfig& cfg);

// Rank-one primal descent with update direction 2 g - 2 K^{1/2} g / ||g||.
// Stationary exactly at the eigenpair scalings of K; generic initializations
// reach the top eigenpair.
Trajectory primal_descent_rank1(const SymMatrix& k, const TrainConfig& cfg);

// Min-min-max decoupling for r < d: outer retracted gradient ascent on an
// orthonormal basis S (direction K S, QR retraction), inner full-rank
// alternating run against S^t K S; returns the composite generator S G_S.
Trajectory subspace_solve(const SymMatrix& k, int r, const TrainConfig& cfg);

// Dispatch on cfg.algorithm.
Trajectory train(const SymMatrix& k, const TrainConfig& cfg);

// Finite-difference certification of the analytic gradients over seeded
// random full-rank instances. corrupt shifts the analytic generator gradient
// and exists so the harness can prove it fails on a broken gradient.
struct GradCheckReport {
  double max_rel_err_g = 0.0;
  double max_rel_err_h = 0.0;
  int instances = 0;
};

GradCheckReport gradcheck_suite(const std::vector<int>& dims, int per_dim,
                                std::uint64_t seed, double fd_step = 1e-5,
                                double corrupt = 0.0);

}  // namespace qgan
