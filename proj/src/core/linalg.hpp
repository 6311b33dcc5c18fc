#pragma once

#include "core/types.hpp"

namespace lapis {

// Eigen decomposition of a Hermitian matrix: values ascending, columns of
// `vectors` orthonormal. Eigenvector phase is unobservable; callers must not
// depend on it, and tests on degenerate spectra compare subspaces.
struct HermEig {
  Vec values;
  CMat vectors;
};

struct SymEig {
  Vec values;
  Mat vectors;
};

// Input is symmetrized as (A + A^H)/2 internally; rejects matrices that are
// not Hermitian to 1e-10 relative Frobenius.
HermEig herm_eig(const CMat& a);

// Real specialization used on weight/Laplacian/kernel matrices.
SymEig sym_eig(const Mat& a);

// Number of singular values above tol * (largest singular value).
int numerical_rank(const CMat& a, double tol = 1e-8);
int numerical_rank(const Mat& a, double tol = 1e-8);

}  // namespace lapis
