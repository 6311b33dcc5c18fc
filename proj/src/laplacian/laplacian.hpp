#pragma once

#include <optional>
#include <vector>

#include "core/linalg.hpp"
#include "core/types.hpp"

namespace lapis {

// Frame-similarity graph: symmetric weights with zero diagonal and
// L = D - W, so rows of L sum to zero and the constant vector is a null
// vector. Eigen decomposition is computed on demand and cached.
class GraphLaplacian {
public:
  static GraphLaplacian from_weights(Mat w);

  int frames() const { return static_cast<int>(weights_.rows()); }
  const Mat& weights() const { return weights_; }
  const Mat& laplacian() const { return laplacian_; }
  bool disconnected() const { return disconnected_; }

  const Vec& eigenvalues() const;
  const Mat& eigenvectors() const;

private:
  Mat weights_;
  Mat laplacian_;
  bool disconnected_ = false;
  mutable std::optional<SymEig> eig_;
};

enum class NeighborRule { Threshold, Knn };

// Exponential weights W_ij = exp(-d_ij^2 / sigma^2) restricted to the
// neighbor rule; the knn graph is symmetrized with max(W, W^T).
GraphLaplacian exp_weights(const CMat& navs, double sigma, NeighborRule rule,
                           double threshold, int knn);

// K_ij = exp(-|R_i - R_j|^2 / sigma^2) over columns, unit diagonal.
Mat gaussian_kernel(const CMat& navs, double sigma);

// Median pairwise column distance; flags (and returns a tiny positive
// fallback) when every distance is zero.
double auto_sigma(const CMat& navs, bool* degenerate = nullptr);

struct IrlsParams {
  double sigma = 0.0;    // kernel width; <= 0 selects the median heuristic
  double mu = 0.05;      // regularization weight, >= 0
  double gamma0 = 0.0;   // initial smoothing; <= 0 selects 100*mean(eig K)/k
  double eta = 1.5;      // gamma decay per iteration, >= 1 (1 keeps it fixed)
  int iterations = 10;
  bool clip_negative = false;  // optional: clamp negative weights to zero
};

struct IrlsIterStat {
  int iter = 0;
  double gamma = 0;
  double cost = 0;          // |R - Z|_F^2 + mu * trace(R L R^H)
  double stationarity = 0;  // |2(R - Z) + 2 mu R L|_F / |Z|_F
};

struct IrlsResult {
  CMat denoised;            // R*
  GraphLaplacian lap;       // from the final weight matrix
  std::vector<IrlsIterStat> trace;
  double sigma = 0;         // resolved kernel width
};

// Kernel low-rank navigator denoising. Each iteration rebuilds the Gaussian
// kernel of the current estimate, forms P = (K + gamma I)^{-1/2} by eigen
// decomposition (eigenvalues floored at zero before the power), derives the
// weight matrix W = -(1/sigma^2) K .* P (symmetrized, zero diagonal), and
// solves the resulting quadratic in closed form: R = Z (I + mu L)^{-1}.
// gamma shrinks by eta after every iteration.
IrlsResult irls_estimate(const CMat& navs, const IrlsParams& params);

}  // namespace lapis
