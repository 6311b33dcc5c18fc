#pragma once

#include "core/types.hpp"

namespace lapis {

// Unnormalized 2-D DFT on an N x N row-major grid:
//   forward:  khat(kr,kc) = sum_{r,c} img(r,c) e^{-j 2 pi (kr r + kc c)/N}
//   backward: the conjugate (adjoint) transform, also unnormalized.
// Backed by FFTW with FFTW_ESTIMATE plans so results are reproducible
// run to run. Instances are not thread-safe; create one per solver.
class Fft2 {
public:
  explicit Fft2(int n);
  ~Fft2();
  Fft2(const Fft2&) = delete;
  Fft2& operator=(const Fft2&) = delete;

  int size() const { return n_; }
  void forward(const cd* img, cd* khat);
  void backward(const cd* khat, cd* img);

private:
  int n_;
  void* plan_fwd_;
  void* plan_bwd_;
  cd* buf_in_;
  cd* buf_out_;
};

// Exact spoke samples of the same unnormalized DFT at continuous
// frequencies rho_m * (cos phi, sin phi); kx pairs with the column index
// and ky with the row index. img is N x N (row, col).
void nudft_spoke(const CMat& img, const Vec& kx, const Vec& ky, CVec& out);

// Adjoint scatter of spoke samples back onto the image grid (accumulates).
void nudft_spoke_adjoint(const CVec& samples, const Vec& kx, const Vec& ky, CMat& img_acc);

}  // namespace lapis
