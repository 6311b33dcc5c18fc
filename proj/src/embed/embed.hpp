#pragma once

#include <vector>

#include "core/types.hpp"
#include "laplacian/laplacian.hpp"

namespace lapis {

struct Embedding {
  Mat coords;                // frames x m; eigenvectors 2..m+1 of L
  bool degenerate_cut = false;  // eigenvalue tie at the truncation boundary
};

// Laplacian eigenmap coordinates: the constant null vector is skipped (the
// zero eigenspace is rotated so its first basis vector is exactly constant),
// each column has unit norm and is sign-fixed so its largest-magnitude entry
// is positive. With generalized = true solves L f = lambda D f instead;
// requires strictly positive degrees.
Embedding embed(const GraphLaplacian& lap, int m, bool generalized = false);

struct BinAssignment {
  std::vector<int> resp;  // per-frame respiratory bin, 0..n_resp-1
  std::vector<int> card;  // per-frame cardiac bin, 0..n_card-1
  int n_resp = 1;
  int n_card = 1;
  std::vector<double> resp_edges;  // inclusive upper coordinate bound per bin
  std::vector<double> card_edges;
};

// Equal-population quantile bins: respiratory from coordinate 1, cardiac from
// coordinate 2; ties broken by frame index. Populations differ by at most one.
BinAssignment assign_bins(const Mat& coords, int n_resp, int n_card);

// Absolute correlation between coord and its best least-squares fit by
// a*cos(theta) + b*sin(theta). Constant coordinates score zero.
double phase_agreement(const Vec& coord, const Vec& theta);

struct GatedImages {
  int n_resp = 0;
  int n_card = 0;
  CMat images;              // pixels x (n_resp*n_card); bin (r,c) at column r*n_card+c
  std::vector<int> counts;  // frames per bin; zero marks an empty bin
};

GatedImages gated_export(const CMat& series, const BinAssignment& bins);

}  // namespace lapis
