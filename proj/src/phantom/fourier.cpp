#include "phantom/fourier.hpp"

#include <fftw3.h>

#include <cstring>

#include "core/errors.hpp"

namespace lapis {

Fft2::Fft2(int n) : n_(n) {
  if (n < 2) throw InvalidArgument("FFT grid must be at least 2x2");
  buf_in_ = reinterpret_cast<cd*>(fftw_malloc(sizeof(cd) * n * n));
  buf_out_ = reinterpret_cast<cd*>(fftw_malloc(sizeof(cd) * n * n));
  plan_fwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_),
                               FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                               reinterpret_cast<fftw_complex*>(buf_out_),
                               FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2::~Fft2() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

void Fft2::forward(const cd* img, cd* khat) {
  std::memcpy(buf_in_, img, sizeof(cd) * n_ * n_);
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(khat, buf_out_, sizeof(cd) * n_ * n_);
}

void Fft2::backward(const cd* khat, cd* img) {
  std::memcpy(buf_in_, khat, sizeof(cd) * n_ * n_);
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  std::memcpy(img, buf_out_, sizeof(cd) * n_ * n_);
}

namespace {

// E[m, i] = e^{-j 2 pi k_m i / N} for i = 0..N-1
void phase_table(const Vec& k, int n, CMat& e) {
  const Eigen::Index m = k.size();
  e.resize(m, n);
  for (Eigen::Index s = 0; s < m; ++s) {
    double w = -2.0 * M_PI * k(s) / n;
    for (int i = 0; i < n; ++i) e(s, i) = cd(std::cos(w * i), std::sin(w * i));
  }
}

}  // namespace

void nudft_spoke(const CMat& img, const Vec& kx, const Vec& ky, CVec& out) {
  const int n = static_cast<int>(img.rows());
  CMat ec, er;
  phase_table(kx, n, ec);  // column phases
  phase_table(ky, n, er);  // row phases
  // out[m] = sum_r er(m,r) * (sum_c img(r,c) ec(m,c))
  CMat t = img * ec.transpose();              // N x M
  out = er.transpose().cwiseProduct(t).colwise().sum().transpose();
}

void nudft_spoke_adjoint(const CVec& samples, const Vec& kx, const Vec& ky, CMat& img_acc) {
  const int n = static_cast<int>(img_acc.rows());
  CMat ec, er;
  phase_table(kx, n, ec);
  phase_table(ky, n, er);
  // img += conj(er)^T diag(samples) conj(ec)
  CMat g = er.adjoint() * samples.asDiagonal();  // N x M
  img_acc.noalias() += g * ec.conjugate();
}

}  // namespace lapis
