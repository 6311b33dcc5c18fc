#include "recon/recon.hpp"

#include <cmath>
#include <functional>

#include "core/errors.hpp"

namespace lapis {

TruncatedBasis eigen_truncate(const GraphLaplacian& lap, int r) {
  const int k = lap.frames();
  if (r < 1 || r > k) throw InvalidArgument("rank must be between 1 and the frame count");
  const Vec& values = lap.eigenvalues();
  const Mat& vectors = lap.eigenvectors();

  double scale = std::max({std::abs(values(0)), std::abs(values(k - 1)), 1e-30});
  TruncatedBasis basis;
  basis.values = values.head(r);
  for (int i = 0; i < r; ++i) {
    if (basis.values(i) < -1e-10 * scale)
      throw NumericalError("Laplacian has a significantly negative eigenvalue: " +
                           std::to_string(basis.values(i)));
    if (std::abs(basis.values(i)) <= 1e-10 * scale) basis.values(i) = 0.0;
  }
  basis.vectors = vectors.leftCols(r).cast<cd>();
  return basis;
}

namespace {

// Conjugate gradient on M x = rhs for Hermitian positive semidefinite M.
// objective(x) = |B|^2 - Re<x, rhs + residual> reproduces the original
// quadratic |A(.) - B|^2 + penalty without extra operator applications.
std::vector<CgLogEntry> run_cg(const std::function<CMat(const CMat&)>& apply,
                               const CMat& rhs, double bnorm2, CgOptions opts, CMat& x) {
  std::vector<CgLogEntry> log;
  x = CMat::Zero(rhs.rows(), rhs.cols());
  CMat res = rhs;
  CMat p = res;
  double rs = res.squaredNorm();
  const double rs0 = std::max(rs, 1e-300);
  for (int it = 1; it <= opts.max_iter; ++it) {
    if (std::sqrt(rs / rs0) < opts.tol) break;
    CMat q = apply(p);
    double pq = p.cwiseProduct(q.conjugate()).sum().real();
    if (!(pq > 0))
      throw NumericalError("normal-equation operator lost positive definiteness");
    double alpha = rs / pq;
    x += alpha * p;
    res -= alpha * q;
    double rs_new = res.squaredNorm();

    CgLogEntry e;
    e.iter = it;
    e.rel_residual = std::sqrt(rs_new / rs0);
    e.objective = bnorm2 - (x.cwiseProduct((rhs + res).conjugate())).sum().real();
    log.push_back(e);

    p = res + (rs_new / rs) * p;
    rs = rs_new;
  }
  return log;
}

}  // namespace

TruncatedSolve solve_truncated(const CVec& b, const FrameOperator& op,
                               const TruncatedBasis& basis, double lambda,
                               CgOptions opts) {
  if (!b.allFinite()) throw InvalidArgument("measurements contain non-finite values");
  if (basis.vectors.rows() != op.frames())
    throw DimensionError("basis frame count does not match the operator");
  if (b.size() != op.samples()) throw DimensionError("sample vector length mismatch");
  if (lambda < 0) throw InvalidArgument("lambda must be non-negative");

  const CMat& v = basis.vectors;
  auto apply = [&](const CMat& u) -> CMat {
    CMat x = u * v.adjoint();
    CMat out = op.adjoint(op.forward(x)) * v;
    out += lambda * u * basis.values.asDiagonal();
    return out;
  };
  CMat rhs = op.adjoint(b) * v;

  TruncatedSolve sol;
  sol.log = run_cg(apply, rhs, b.squaredNorm(), opts, sol.coeffs);
  sol.series = sol.coeffs * v.adjoint();
  return sol;
}

FullSolve solve_full(const CVec& b, const FrameOperator& op, const GraphLaplacian& lap,
                     double lambda, CgOptions opts, bool allow_large) {
  if (!b.allFinite()) throw InvalidArgument("measurements contain non-finite values");
  if (lap.frames() != op.frames())
    throw DimensionError("Laplacian frame count does not match the operator");
  if (b.size() != op.samples()) throw DimensionError("sample vector length mismatch");
  const long unknowns = static_cast<long>(op.pixels()) * op.frames();
  if (unknowns > 100000 && !allow_large)
    throw InvalidArgument("full solve refused at " + std::to_string(unknowns) +
                          " unknowns; use solve_truncated for image-scale problems");

  const Mat& l = lap.laplacian();
  auto apply = [&](const CMat& x) -> CMat {
    CMat out = op.adjoint(op.forward(x));
    out += lambda * x * l;
    return out;
  };
  CMat rhs = op.adjoint(b);

  FullSolve sol;
  sol.log = run_cg(apply, rhs, b.squaredNorm(), opts, sol.series);
  return sol;
}

double nrmse(const CMat& x, const CMat& truth) {
  if (x.rows() != truth.rows() || x.cols() != truth.cols())
    throw DimensionError("series shapes differ");
  double denom = truth.norm();
  if (denom == 0) throw InvalidArgument("reference series is identically zero");
  return (x - truth).norm() / denom;
}

double adjoint_baseline_nrmse(const CVec& b, const FrameOperator& op, const CMat& truth) {
  CMat a = op.adjoint(b);
  double an2 = a.squaredNorm();
  double tn = truth.norm();
  if (tn == 0) throw InvalidArgument("reference series is identically zero");
  if (an2 == 0) return 1.0;
  cd inner = truth.cwiseProduct(a.conjugate()).sum();  // <a, truth>
  cd alpha = inner / an2;
  return (alpha * a - truth).norm() / tn;
}

}  // namespace lapis
