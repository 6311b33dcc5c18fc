#include "embed/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace lapis {

namespace {

void sign_fix(Mat& coords) {
  for (Eigen::Index c = 0; c < coords.cols(); ++c) {
    Eigen::Index imax = 0;
    coords.col(c).cwiseAbs().maxCoeff(&imax);
    if (coords(imax, c) < 0) coords.col(c) = -coords.col(c);
  }
}

// Rotate the eigenvector block of the smallest eigenvalue cluster so that its
// first column is the normalized constant vector; the rest is completed by
// Gram-Schmidt. Disconnected graphs otherwise hand back an arbitrary basis of
// the null space that mixes the constant direction into the embedding.
void pin_constant_first(Mat& vectors, const Vec& values) {
  const Eigen::Index k = vectors.rows();
  double scale = std::max(std::abs(values(values.size() - 1)), 1e-30);
  Eigen::Index cluster = 1;
  while (cluster < values.size() &&
         std::abs(values(cluster) - values(0)) <= 1e-9 * scale)
    ++cluster;
  if (cluster == 1) return;  // simple smallest eigenvalue; solver basis is fine

  Mat block = vectors.leftCols(cluster);
  Vec ones = Vec::Constant(k, 1.0 / std::sqrt(double(k)));
  Vec w = block.transpose() * ones;
  if (w.norm() < 1e-8) return;  // constant vector not in the cluster span

  Mat rotated(k, cluster);
  rotated.col(0) = block * (w / w.norm());
  Eigen::Index filled = 1;
  for (Eigen::Index j = 0; j < cluster && filled < cluster; ++j) {
    Vec cand = block.col(j);
    for (Eigen::Index i = 0; i < filled; ++i)
      cand -= rotated.col(i).dot(cand) * rotated.col(i);
    double nn = cand.norm();
    if (nn > 1e-8) rotated.col(filled++) = cand / nn;
  }
  if (filled == cluster) vectors.leftCols(cluster) = rotated;
}

}  // namespace

Embedding embed(const GraphLaplacian& lap, int m, bool generalized) {
  const int k = lap.frames();
  if (m < 0) throw InvalidArgument("embedding dimension must be non-negative");
  if (m + 1 > k) throw DimensionError("embedding needs at least m+1 eigenpairs");

  Vec values;
  Mat vectors;
  if (!generalized) {
    values = lap.eigenvalues();
    vectors = lap.eigenvectors();
  } else {
    Vec deg = lap.weights().rowwise().sum();
    if ((deg.array() <= 0).any())
      throw InvalidArgument("generalized embedding needs strictly positive degrees");
    Vec dinv = deg.array().rsqrt();
    Mat sym = dinv.asDiagonal() * lap.laplacian() * dinv.asDiagonal();
    SymEig eig = sym_eig(sym);
    values = eig.values;
    vectors = dinv.asDiagonal() * eig.vectors;  // generalized eigenvectors
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) vectors.col(c).normalize();
  }

  pin_constant_first(vectors, values);

  Embedding out;
  out.coords = vectors.middleCols(1, m);
  for (Eigen::Index c = 0; c < out.coords.cols(); ++c) out.coords.col(c).normalize();
  sign_fix(out.coords);

  if (m >= 1 && m + 1 < k) {
    double scale = std::max(std::abs(values(k - 1)), 1e-30);
    if (std::abs(values(m + 1) - values(m)) <= 1e-9 * scale) out.degenerate_cut = true;
  }
  return out;
}

namespace {

std::vector<int> quantile_bins(const Vec& coord, int nbins, std::vector<double>* edges) {
  const Eigen::Index k = coord.size();
  std::vector<Eigen::Index> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (coord(a) != coord(b)) return coord(a) < coord(b);
    return a < b;
  });
  std::vector<int> bin(k, 0);
  for (Eigen::Index rank = 0; rank < k; ++rank)
    bin[order[rank]] = static_cast<int>((rank * nbins) / k);
  if (edges) {
    edges->assign(nbins, coord(order[k - 1]));
    for (Eigen::Index rank = 0; rank < k; ++rank)
      (*edges)[bin[order[rank]]] = coord(order[rank]);
  }
  return bin;
}

}  // namespace

BinAssignment assign_bins(const Mat& coords, int n_resp, int n_card) {
  if (coords.cols() < 2) throw DimensionError("binning needs at least two coordinates");
  if (n_resp < 1 || n_card < 1) throw InvalidArgument("bin counts must be positive");
  BinAssignment out;
  out.n_resp = n_resp;
  out.n_card = n_card;
  out.resp = quantile_bins(coords.col(0), n_resp, &out.resp_edges);
  out.card = quantile_bins(coords.col(1), n_card, &out.card_edges);
  return out;
}

double phase_agreement(const Vec& coord, const Vec& theta) {
  if (coord.size() != theta.size()) throw DimensionError("length mismatch");
  const Eigen::Index k = coord.size();
  if (k < 3) throw DimensionError("need at least three frames");

  Mat design(k, 2);
  design.col(0) = theta.array().cos();
  design.col(1) = theta.array().sin();
  Vec ab = design.colPivHouseholderQr().solve(coord);
  Vec fit = design * ab;

  double mc = coord.mean(), mf = fit.mean();
  Vec dc = coord.array() - mc, df = fit.array() - mf;
  double denom = dc.norm() * df.norm();
  if (denom <= 0) return 0.0;
  return std::abs(dc.dot(df)) / denom;
}

GatedImages gated_export(const CMat& series, const BinAssignment& bins) {
  const Eigen::Index k = series.cols();
  if (static_cast<Eigen::Index>(bins.resp.size()) != k ||
      static_cast<Eigen::Index>(bins.card.size()) != k)
    throw DimensionError("bin assignment does not match the frame count");

  GatedImages out;
  out.n_resp = bins.n_resp;
  out.n_card = bins.n_card;
  out.images = CMat::Zero(series.rows(), bins.n_resp * bins.n_card);
  out.counts.assign(bins.n_resp * bins.n_card, 0);
  for (Eigen::Index t = 0; t < k; ++t) {
    int idx = bins.resp[t] * bins.n_card + bins.card[t];
    out.images.col(idx) += series.col(t);
    out.counts[idx] += 1;
  }
  for (int i = 0; i < bins.n_resp * bins.n_card; ++i)
    if (out.counts[i] > 0) out.images.col(i) /= double(out.counts[i]);
  return out;
}

}  // namespace lapis
