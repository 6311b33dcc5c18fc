#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace lapis {

using FreqVec = std::array<int, 3>;  // trailing components 0 when unused

// Real-valued trigonometric polynomial psi(x) = sum_k c_k e^{j 2 pi k.x} whose
// zero level set is the manifold under study. Conjugate symmetry of the
// coefficients (c_{-k} = conj(c_k) with -k in the support) is enforced at
// construction, as is a nonzero coefficient vector.
class LevelSetModel {
public:
  LevelSetModel(int ambient_dim, std::vector<FreqVec> support, std::vector<cd> coeffs);

  int ambient_dim() const { return dim_; }
  const std::vector<FreqVec>& support() const { return support_; }
  const std::vector<cd>& coeffs() const { return coeffs_; }

private:
  int dim_;
  std::vector<FreqVec> support_;
  std::vector<cd> coeffs_;
};

// Centered rectangular frequency box Gamma with per-dimension half extents,
// optionally with a Gaussian weighting e^{-pi^2 sigma^2 |k|^2} on the feature
// map entries. Frequencies are enumerated in ascending lexicographic order on
// (k1, ..., kn), k1 slowest.
struct FeatureSupport {
  int dim = 2;
  std::array<int, 3> half_extent{0, 0, 0};
  bool gaussian = false;
  double sigma = 0.0;

  int size() const;                   // |Gamma|
  FreqVec freq_at(int index) const;   // lexicographic enumeration
  int index_of(const FreqVec& k) const;  // -1 if outside the box
  bool contains(const FreqVec& k) const;
  double weight(const FreqVec& k) const;
};

double eval_potential(const LevelSetModel& m, const Vec& x);

// Points on the zero level set found by bisection along random chords whose
// endpoints have opposite sign; |psi| < 1e-10 at every returned point.
// Deterministic for fixed seed. Throws if no sign change is found after a
// bounded number of chords.
Mat sample_levelset(const LevelSetModel& m, int count, uint64_t seed);

CVec feature_map(const Vec& x, const FeatureSupport& s);
CMat feature_matrix(const Mat& points, const FeatureSupport& s);

// Gram matrix of the (weighted) feature maps via the shift-invariant kernel
// kappa(x_j - x_i); the Dirichlet product when unweighted. Real symmetric.
Mat gram_matrix(const Mat& points, const FeatureSupport& s);

// Shift-invariant kernel value at displacement r.
double gram_kernel(const Vec& r, const FeatureSupport& s);

// Number of integer shifts s such that support + s stays inside gamma.
int valid_shift_count(const std::vector<FreqVec>& support, const FeatureSupport& gamma);

}  // namespace lapis
