#include "laplacian/laplacian.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace lapis {

namespace {

// Squared pairwise column distances via the Gram matrix, clamped at zero.
Mat pairwise_sq_dist(const CMat& z) {
  const Eigen::Index k = z.cols();
  Mat g = (z.adjoint() * z).real();
  Vec d = g.diagonal();
  Mat out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      out(i, j) = std::max(0.0, d(i) + d(j) - 2.0 * g(i, j));
  return out;
}

bool is_connected(const Mat& w) {
  const Eigen::Index k = w.rows();
  std::vector<char> seen(k, 0);
  std::vector<Eigen::Index> stack{0};
  seen[0] = 1;
  Eigen::Index reached = 1;
  while (!stack.empty()) {
    Eigen::Index i = stack.back();
    stack.pop_back();
    for (Eigen::Index j = 0; j < k; ++j)
      if (!seen[j] && w(i, j) != 0.0) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == k;
}

}  // namespace

GraphLaplacian GraphLaplacian::from_weights(Mat w) {
  if (w.rows() != w.cols() || w.rows() == 0)
    throw DimensionError("weight matrix must be square and nonempty");
  w = 0.5 * (w + w.transpose()).eval();
  w.diagonal().setZero();
  GraphLaplacian g;
  g.laplacian_ = -w;
  g.laplacian_.diagonal() = w.rowwise().sum();
  g.disconnected_ = !is_connected(w);
  g.weights_ = std::move(w);
  return g;
}

const Vec& GraphLaplacian::eigenvalues() const {
  if (!eig_) eig_ = sym_eig(laplacian_);
  return eig_->values;
}

const Mat& GraphLaplacian::eigenvectors() const {
  if (!eig_) eig_ = sym_eig(laplacian_);
  return eig_->vectors;
}

GraphLaplacian exp_weights(const CMat& navs, double sigma, NeighborRule rule,
                           double threshold, int knn) {
  if (!(sigma > 0)) throw InvalidArgument("sigma must be positive");
  const Eigen::Index k = navs.cols();
  if (k < 1) throw DimensionError("need at least one frame");
  Mat d2 = pairwise_sq_dist(navs);
  Mat w = Mat::Zero(k, k);

  if (rule == NeighborRule::Threshold) {
    if (!(threshold > 0)) throw InvalidArgument("threshold must be positive");
    double t2 = threshold * threshold;
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        if (i != j && d2(i, j) < t2) w(i, j) = std::exp(-d2(i, j) / (sigma * sigma));
  } else {
    if (knn < 1) throw InvalidArgument("knn neighbor count must be at least 1");
    std::vector<Eigen::Index> order(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (d2(i, a) != d2(i, b)) return d2(i, a) < d2(i, b);
        return a < b;
      });
      int taken = 0;
      for (Eigen::Index j : order) {
        if (j == i) continue;
        w(i, j) = std::exp(-d2(i, j) / (sigma * sigma));
        if (++taken == knn) break;
      }
    }
    w = w.cwiseMax(w.transpose().eval());
  }
  return GraphLaplacian::from_weights(std::move(w));
}

Mat gaussian_kernel(const CMat& navs, double sigma) {
  if (!(sigma > 0)) throw InvalidArgument("sigma must be positive");
  Mat d2 = pairwise_sq_dist(navs);
  Mat k = (-d2 / (sigma * sigma)).array().exp();
  k.diagonal().setOnes();
  return k;
}

double auto_sigma(const CMat& navs, bool* degenerate) {
  const Eigen::Index k = navs.cols();
  if (k < 2) throw DimensionError("need at least two frames for the median distance");
  Mat d2 = pairwise_sq_dist(navs);
  std::vector<double> d;
  d.reserve(k * (k - 1) / 2);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) d.push_back(std::sqrt(d2(i, j)));
  std::sort(d.begin(), d.end());
  double med = d.size() % 2 ? d[d.size() / 2]
                            : 0.5 * (d[d.size() / 2 - 1] + d[d.size() / 2]);
  if (degenerate) *degenerate = false;
  if (med <= 0) {
    if (degenerate) *degenerate = true;
    return 1e-12 * std::max(1.0, navs.norm());
  }
  return med;
}

IrlsResult irls_estimate(const CMat& navs, const IrlsParams& params) {
  if (navs.size() == 0) throw DimensionError("navigator matrix is empty");
  if (!navs.allFinite()) throw InvalidArgument("navigator matrix contains non-finite values");
  if (params.mu < 0) throw InvalidArgument("mu must be non-negative");
  if (params.eta < 1) throw InvalidArgument("eta must be at least 1");
  if (params.iterations < 1) throw InvalidArgument("need at least one iteration");

  const Eigen::Index k = navs.cols();
  double sigma = params.sigma > 0 ? params.sigma : auto_sigma(navs);

  IrlsResult res;
  res.sigma = sigma;
  CMat r = navs;
  double gamma = params.gamma0;
  Mat w_final;

  for (int it = 1; it <= params.iterations; ++it) {
    Mat kern = gaussian_kernel(r, sigma);
    if (gamma <= 0) gamma = 100.0 * kern.trace() / double(k * k);  // first iteration only
    SymEig eig = sym_eig(kern);
    Vec scale(k);
    for (Eigen::Index i = 0; i < k; ++i)
      scale(i) = 1.0 / std::sqrt(std::max(eig.values(i), 0.0) + gamma);
    Mat p = eig.vectors * scale.asDiagonal() * eig.vectors.transpose();

    Mat w = (-1.0 / (sigma * sigma)) * kern.cwiseProduct(p);
    if (params.clip_negative) w = w.cwiseMax(0.0);
    GraphLaplacian lap = GraphLaplacian::from_weights(std::move(w));

    // R = Z (I + mu L)^{-1}, the closed-form minimizer of
    // |R - Z|_F^2 + mu trace(R L R^H).
    const Mat& l = lap.laplacian();
    CMat r_new;
    if (params.mu == 0) {
      r_new = navs;
    } else {
      Mat sys = Mat::Identity(k, k) + params.mu * l;
      Eigen::LLT<Mat> llt(sys);
      if (llt.info() != Eigen::Success)
        throw NumericalError("I + mu*L is not positive definite; reduce mu");
      r_new = llt.solve(navs.adjoint()).adjoint();
    }

    IrlsIterStat stat;
    stat.iter = it;
    stat.gamma = gamma;
    CMat grad = 2.0 * (r_new - navs) + 2.0 * params.mu * r_new * l;
    stat.stationarity = grad.norm() / std::max(1e-300, navs.norm());
    stat.cost = (r_new - navs).squaredNorm() +
                params.mu * (r_new * l).cwiseProduct(r_new.conjugate()).sum().real();
    res.trace.push_back(stat);

    r = std::move(r_new);
    w_final = lap.weights();
    gamma /= params.eta;
  }

  res.denoised = std::move(r);
  res.lap = GraphLaplacian::from_weights(std::move(w_final));
  return res;
}

}  // namespace lapis
