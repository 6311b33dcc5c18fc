#include "levelset/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace lapis {

namespace {

constexpr double kRootTol = 1e-10;
constexpr int kMaxBisect = 200;

double dot(const FreqVec& k, const Vec& x, int dim) {
  double s = 0;
  for (int d = 0; d < dim; ++d) s += k[d] * x(d);
  return s;
}

}  // namespace

LevelSetModel::LevelSetModel(int ambient_dim, std::vector<FreqVec> support,
                             std::vector<cd> coeffs)
    : dim_(ambient_dim), support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (dim_ != 2 && dim_ != 3)
    throw InvalidArgument("ambient dimension must be 2 or 3");
  if (support_.size() != coeffs_.size() || support_.empty())
    throw InvalidArgument("support and coefficient lists must match and be nonempty");

  std::map<FreqVec, cd> by_freq;
  double cmax = 0;
  for (size_t i = 0; i < support_.size(); ++i) {
    FreqVec k = support_[i];
    for (int d = dim_; d < 3; ++d)
      if (k[d] != 0) throw InvalidArgument("frequency uses more components than ambient_dim");
    if (!by_freq.emplace(k, coeffs_[i]).second)
      throw InvalidArgument("duplicate frequency in support");
    cmax = std::max(cmax, std::abs(coeffs_[i]));
  }
  if (cmax == 0) throw InvalidArgument("coefficients are identically zero");
  for (const auto& [k, c] : by_freq) {
    FreqVec neg{-k[0], -k[1], -k[2]};
    auto it = by_freq.find(neg);
    if (it == by_freq.end())
      throw InvalidArgument("support is not symmetric: missing mirrored frequency");
    if (std::abs(it->second - std::conj(c)) > 1e-12 * std::max(1.0, cmax))
      throw InvalidArgument("coefficients violate conjugate symmetry");
  }
}

double eval_potential(const LevelSetModel& m, const Vec& x) {
  if (x.size() != m.ambient_dim()) throw DimensionError("point dimension mismatch");
  cd acc(0, 0);
  const auto& ks = m.support();
  const auto& cs = m.coeffs();
  for (size_t i = 0; i < ks.size(); ++i) {
    double phase = 2.0 * M_PI * dot(ks[i], x, m.ambient_dim());
    acc += cs[i] * cd(std::cos(phase), std::sin(phase));
  }
  return acc.real();
}

Mat sample_levelset(const LevelSetModel& m, int count, uint64_t seed) {
  if (count < 0) throw InvalidArgument("sample count must be non-negative");
  const int n = m.ambient_dim();
  Mat points(n, count);
  if (count == 0) return points;

  const uint64_t budget = std::max<uint64_t>(20000, 2000ull * count);
  uint64_t chord = 0;
  int found = 0;
  Vec a(n), b(n), mid(n);
  while (found < count) {
    if (chord >= budget)
      throw NumericalError(
          "level-set sampling found no sign change after " + std::to_string(chord) +
          " random chords; the zero set is likely empty or measure-deficient");
    for (int d = 0; d < n; ++d) {
      a(d) = rng::uniform(seed, chord * 2 * n + d);
      b(d) = rng::uniform(seed, chord * 2 * n + n + d);
    }
    ++chord;
    double fa = eval_potential(m, a);
    double fb = eval_potential(m, b);
    if (std::abs(fa) < kRootTol) {
      points.col(found++) = a;
      continue;
    }
    if (std::abs(fb) < kRootTol) {
      points.col(found++) = b;
      continue;
    }
    if (fa * fb > 0) continue;

    bool hit = false;
    for (int it = 0; it < kMaxBisect; ++it) {
      mid = 0.5 * (a + b);
      double fm = eval_potential(m, mid);
      if (std::abs(fm) < kRootTol) {
        points.col(found++) = mid;
        hit = true;
        break;
      }
      if (fa * fm < 0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    (void)hit;  // a non-converged chord simply does not contribute a point
  }
  return points;
}

int FeatureSupport::size() const {
  int s = 1;
  for (int d = 0; d < dim; ++d) s *= 2 * half_extent[d] + 1;
  return s;
}

FreqVec FeatureSupport::freq_at(int index) const {
  FreqVec k{0, 0, 0};
  for (int d = dim - 1; d >= 0; --d) {
    int width = 2 * half_extent[d] + 1;
    k[d] = index % width - half_extent[d];
    index /= width;
  }
  return k;
}

int FeatureSupport::index_of(const FreqVec& k) const {
  if (!contains(k)) return -1;
  int index = 0;
  for (int d = 0; d < dim; ++d)
    index = index * (2 * half_extent[d] + 1) + (k[d] + half_extent[d]);
  return index;
}

bool FeatureSupport::contains(const FreqVec& k) const {
  for (int d = 0; d < dim; ++d)
    if (std::abs(k[d]) > half_extent[d]) return false;
  for (int d = dim; d < 3; ++d)
    if (k[d] != 0) return false;
  return true;
}

double FeatureSupport::weight(const FreqVec& k) const {
  if (!gaussian) return 1.0;
  double k2 = 0;
  for (int d = 0; d < dim; ++d) k2 += double(k[d]) * k[d];
  return std::exp(-M_PI * M_PI * sigma * sigma * k2);
}

CVec feature_map(const Vec& x, const FeatureSupport& s) {
  if (x.size() != s.dim) throw DimensionError("point dimension mismatch");
  const int p = s.size();
  CVec v(p);
  for (int i = 0; i < p; ++i) {
    FreqVec k = s.freq_at(i);
    double phase = 2.0 * M_PI * dot(k, x, s.dim);
    v(i) = s.weight(k) * cd(std::cos(phase), std::sin(phase));
  }
  return v;
}

CMat feature_matrix(const Mat& points, const FeatureSupport& s) {
  if (points.rows() != s.dim) throw DimensionError("point dimension mismatch");
  CMat phi(s.size(), points.cols());
  for (Eigen::Index j = 0; j < points.cols(); ++j)
    phi.col(j) = feature_map(points.col(j), s);
  return phi;
}

namespace {

// One-dimensional kernel sum_{k=-h..h} w(k)^2 e^{j 2 pi k r}; real by symmetry.
double kernel_1d(double r, int h, bool gaussian, double sigma) {
  if (gaussian) {
    double acc = 1.0;
    for (int k = 1; k <= h; ++k) {
      double w = std::exp(-2.0 * M_PI * M_PI * sigma * sigma * double(k) * k);
      acc += 2.0 * w * std::cos(2.0 * M_PI * k * r);
    }
    return acc;
  }
  double den = std::sin(M_PI * r);
  if (std::abs(den) < 1e-9) {
    // near-integer displacement: evaluate the cosine sum directly
    double acc = 1.0;
    for (int k = 1; k <= h; ++k) acc += 2.0 * std::cos(2.0 * M_PI * k * r);
    return acc;
  }
  return std::sin((2 * h + 1) * M_PI * r) / den;
}

}  // namespace

double gram_kernel(const Vec& r, const FeatureSupport& s) {
  double acc = 1.0;
  for (int d = 0; d < s.dim; ++d)
    acc *= kernel_1d(r(d), s.half_extent[d], s.gaussian, s.sigma);
  return acc;
}

Mat gram_matrix(const Mat& points, const FeatureSupport& s) {
  if (points.rows() != s.dim) throw DimensionError("point dimension mismatch");
  const Eigen::Index c = points.cols();
  Mat g(c, c);
  Vec r(s.dim);
  for (Eigen::Index i = 0; i < c; ++i) {
    for (Eigen::Index j = i; j < c; ++j) {
      r = points.col(j) - points.col(i);
      double v = gram_kernel(r, s);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

int valid_shift_count(const std::vector<FreqVec>& support, const FeatureSupport& gamma) {
  if (support.empty()) return 0;
  int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (int d = 0; d < gamma.dim; ++d) {
    int kmin = support[0][d], kmax = support[0][d];
    for (const auto& k : support) {
      kmin = std::min(kmin, k[d]);
      kmax = std::max(kmax, k[d]);
    }
    lo[d] = -gamma.half_extent[d] - kmin;
    hi[d] = gamma.half_extent[d] - kmax;
    if (hi[d] < lo[d]) return 0;
  }
  int count = 1;
  for (int d = 0; d < gamma.dim; ++d) count *= hi[d] - lo[d] + 1;
  return count;
}

}  // namespace lapis
