#include "core/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "core/errors.hpp"

namespace lapis {

namespace {

void check_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows == 0 || cols == 0) throw DimensionError("empty matrix");
  if (rows != cols)
    throw DimensionError("matrix must be square, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
}

}  // namespace

HermEig herm_eig(const CMat& a) {
  check_square(a.rows(), a.cols());
  double scale = a.norm();
  if (scale > 0 && (a - a.adjoint()).norm() > 1e-10 * scale)
    throw InvalidArgument("matrix is not Hermitian to 1e-10 relative");
  CMat sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigen iteration failed to converge for a " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " matrix (QL sweep limit reached)");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SymEig sym_eig(const Mat& a) {
  check_square(a.rows(), a.cols());
  double scale = a.norm();
  if (scale > 0 && (a - a.transpose()).norm() > 1e-10 * scale)
    throw InvalidArgument("matrix is not symmetric to 1e-10 relative");
  Mat sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericalError("symmetric eigen iteration failed to converge for a " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " matrix (QL sweep limit reached)");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

template <typename M>
int rank_impl(const M& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("empty matrix");
  if (!(tol > 0)) throw InvalidArgument("rank tolerance must be positive");
  Eigen::BDCSVD<M> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return 0;
  double cut = tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

}  // namespace

int numerical_rank(const CMat& a, double tol) { return rank_impl(a, tol); }
int numerical_rank(const Mat& a, double tol) { return rank_impl(a, tol); }

}  // namespace lapis
