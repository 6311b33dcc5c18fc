#pragma once

#include <vector>

#include "core/types.hpp"
#include "laplacian/laplacian.hpp"
#include "recon/operator.hpp"

namespace lapis {

// The r eigenpairs of L with the smallest eigenvalues. Columns of `vectors`
// are orthonormal; `values` ascend and start at zero (entries within
// round-off of zero are clamped so the constant direction is unpenalized).
struct TruncatedBasis {
  CMat vectors;  // frames x r
  Vec values;    // r
};

TruncatedBasis eigen_truncate(const GraphLaplacian& lap, int r);

struct CgOptions {
  double tol = 1e-6;   // relative residual on the normal equations
  int max_iter = 100;
};

struct CgLogEntry {
  int iter = 0;
  double rel_residual = 0;
  double objective = 0;  // data + penalty value of the original problem
};

struct TruncatedSolve {
  CMat coeffs;  // pixels x r
  CMat series;  // coeffs * vectors^H
  std::vector<CgLogEntry> log;
};

// Minimizes |A(U V^H) - B|_F^2 + lambda sum_i values_i |u_i|^2 by conjugate
// gradient on the r-column normal equations, starting from U = 0.
TruncatedSolve solve_truncated(const CVec& b, const FrameOperator& op,
                               const TruncatedBasis& basis, double lambda,
                               CgOptions opts = {});

struct FullSolve {
  CMat series;
  std::vector<CgLogEntry> log;
};

// Reference solver for |A(X) - B|_F^2 + lambda trace(X L X^H); refuses
// problems beyond ~1e5 unknowns unless allow_large is set.
FullSolve solve_full(const CVec& b, const FrameOperator& op, const GraphLaplacian& lap,
                     double lambda, CgOptions opts = {1e-8, 500}, bool allow_large = false);

// |x - truth|_F / |truth|_F
double nrmse(const CMat& x, const CMat& truth);

// Baseline used in quality comparisons: the adjoint image scaled by the
// truth-optimal complex factor (scale-free measure of the gridded recon).
double adjoint_baseline_nrmse(const CVec& b, const FrameOperator& op, const CMat& truth);

}  // namespace lapis
