#include "phantom/acquisition.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace lapis {

std::vector<double> default_nav_angles(int nav_count) {
  switch (nav_count) {
    case 4:
      return {0.0, 45.0, 90.0, 135.0};
    case 2:
      return {0.0, 90.0};
    case 1:
      return {0.0};
    default:
      throw InvalidArgument("nav_count must be 1, 2 or 4");
  }
}

CMat make_coil_maps(int grid, int coils) {
  if (coils < 1) throw InvalidArgument("coil count must be positive");
  const double N = grid;
  const double radius = 0.75 * N;
  const double base = 0.08;
  CMat maps(grid * grid, coils);
  for (int j = 0; j < coils; ++j) {
    // lobe centers on a ring; for 4 coils these are the quadrant centers
    double ang = 2.0 * M_PI * (j + 0.5) / coils;
    double cr = 0.5 * N + 0.25 * N * std::sin(ang);
    double cc = 0.5 * N + 0.25 * N * std::cos(ang);
    double ramp_r = 0.35 * std::cos(ang) / N;
    double ramp_c = -0.35 * std::sin(ang) / N;
    for (int r = 0; r < grid; ++r)
      for (int c = 0; c < grid; ++c) {
        double d = std::hypot(r - cr, c - cc) / radius;
        double mag = base;
        if (d < 1.0) mag += (1.0 - base) * 0.5 * (1.0 + std::cos(M_PI * d));
        double phase = 2.0 * M_PI * (ramp_r * r + ramp_c * c);
        maps(r * grid + c, j) = mag * cd(std::cos(phase), std::sin(phase));
      }
  }
  return maps;
}

MeasurementOperator::MeasurementOperator(const AcquisitionSpec& acq, int frames)
    : acq_(acq), grid_(acq.grid), n_(acq.grid * acq.grid), frames_(frames) {
  if (frames < 1) throw InvalidArgument("frame count must be positive");
  if (acq_.lines_per_frame < 1) throw InvalidArgument("lines_per_frame must be positive");
  if (acq_.samples_per_spoke < 2) throw InvalidArgument("samples_per_spoke must be at least 2");
  const auto navs = default_nav_angles(acq_.nav_count);
  if (acq_.nav_count > acq_.lines_per_frame)
    throw InvalidArgument("nav_count exceeds lines_per_frame");
  if (acq_.coil_maps.size() == 0) acq_.coil_maps = make_coil_maps(grid_, acq_.coils);
  if (acq_.coil_maps.rows() != n_ || acq_.coil_maps.cols() != acq_.coils)
    throw DimensionError("coil map shape does not match grid/coil count");

  const int golden_per_frame = acq_.lines_per_frame - acq_.nav_count;
  angles_deg_.resize(frames_);
  for (int i = 0; i < frames_; ++i) {
    auto& a = angles_deg_[i];
    a = navs;
    for (int g = 0; g < golden_per_frame; ++g) {
      long idx = static_cast<long>(i) * golden_per_frame + g;
      a.push_back(std::fmod(acq_.golden_offset_deg + idx * kGoldenAngleDeg, 180.0));
    }
  }

  const int m = acq_.samples_per_spoke;
  rho_.resize(m);
  for (int s = 0; s < m; ++s) rho_(s) = -0.5 * grid_ + double(s) * grid_ / m;

  if (acq_.mode == SamplingMode::CartesianMask) {
    fft_ = std::make_unique<Fft2>(grid_);
    grid_index_.resize(frames_);
    for (int i = 0; i < frames_; ++i) {
      auto& gi = grid_index_[i];
      gi.resize(static_cast<size_t>(acq_.lines_per_frame) * m);
      for (int sp = 0; sp < acq_.lines_per_frame; ++sp) {
        double phi = angles_deg_[i][sp] * M_PI / 180.0;
        double cs = std::cos(phi), sn = std::sin(phi);
        for (int s = 0; s < m; ++s) {
          long kc = std::lround(rho_(s) * cs);
          long kr = std::lround(rho_(s) * sn);
          int ir = static_cast<int>(((kr % grid_) + grid_) % grid_);
          int ic = static_cast<int>(((kc % grid_) + grid_) % grid_);
          gi[sp * m + s] = ir * grid_ + ic;
        }
      }
    }
  } else {
    // Nyquist box check; with the standard radius grid this cannot trip,
    // but custom offsets must not push samples outside +-N/2.
    for (int i = 0; i < frames_; ++i)
      for (double ang : angles_deg_[i]) {
        double phi = ang * M_PI / 180.0;
        for (int s = 0; s < m; ++s) {
          double kx = rho_(s) * std::cos(phi), ky = rho_(s) * std::sin(phi);
          if (std::abs(kx) > 0.5 * grid_ + 1e-9 || std::abs(ky) > 0.5 * grid_ + 1e-9)
            throw InvalidArgument("trajectory sample outside the Nyquist box");
        }
      }
  }
}

Eigen::Index MeasurementOperator::samples() const {
  return static_cast<Eigen::Index>(frames_) * acq_.coils * acq_.lines_per_frame *
         acq_.samples_per_spoke;
}

Eigen::Index MeasurementOperator::sample_index(int frame, int coil, int spoke,
                                               int sample) const {
  return ((static_cast<Eigen::Index>(frame) * acq_.coils + coil) * acq_.lines_per_frame +
          spoke) *
             acq_.samples_per_spoke +
         sample;
}

void MeasurementOperator::spoke_coords(int frame, int spoke, Vec& kx, Vec& ky) const {
  const int m = acq_.samples_per_spoke;
  kx.resize(m);
  ky.resize(m);
  if (acq_.mode == SamplingMode::CartesianMask) {
    const auto& gi = grid_index_[frame];
    for (int s = 0; s < m; ++s) {
      int ir = gi[spoke * m + s] / grid_;
      int ic = gi[spoke * m + s] % grid_;
      ky(s) = ir;  // grid frequency indices, modulo N
      kx(s) = ic;
    }
  } else {
    double phi = angles_deg_[frame][spoke] * M_PI / 180.0;
    for (int s = 0; s < m; ++s) {
      kx(s) = rho_(s) * std::cos(phi);
      ky(s) = rho_(s) * std::sin(phi);
    }
  }
}

CVec MeasurementOperator::forward(const CMat& x) const {
  if (x.rows() != n_ || x.cols() != frames_)
    throw DimensionError("Casorati shape does not match the operator");
  const int m = acq_.samples_per_spoke;
  const int L = acq_.lines_per_frame;
  const int C = acq_.coils;
  CVec b(samples());

  if (acq_.mode == SamplingMode::CartesianMask) {
    CVec img(n_), khat(n_);
    for (int i = 0; i < frames_; ++i) {
      const auto& gi = grid_index_[i];
      for (int j = 0; j < C; ++j) {
        img = acq_.coil_maps.col(j).cwiseProduct(x.col(i));
        fft_->forward(img.data(), khat.data());
        Eigen::Index base = sample_index(i, j, 0, 0);
        for (int t = 0; t < L * m; ++t) b(base + t) = khat(gi[t]);
      }
    }
    return b;
  }

  Vec kx, ky;
  CVec spoke_out(m), weighted(n_);
  CMat coil_img(grid_, grid_);
  for (int i = 0; i < frames_; ++i) {
    for (int j = 0; j < C; ++j) {
      weighted = acq_.coil_maps.col(j).cwiseProduct(x.col(i));
      // row-major pixel layout: pixel (r,c) sits at r*N + c
      coil_img = Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic,
                                                Eigen::RowMajor>>(weighted.data(), grid_,
                                                                  grid_);
      for (int sp = 0; sp < L; ++sp) {
        spoke_coords(i, sp, kx, ky);
        nudft_spoke(coil_img, kx, ky, spoke_out);
        b.segment(sample_index(i, j, sp, 0), m) = spoke_out;
      }
    }
  }
  return b;
}

CMat MeasurementOperator::adjoint(const CVec& b) const {
  if (b.size() != samples()) throw DimensionError("sample vector length mismatch");
  const int m = acq_.samples_per_spoke;
  const int L = acq_.lines_per_frame;
  const int C = acq_.coils;
  CMat x = CMat::Zero(n_, frames_);

  if (acq_.mode == SamplingMode::CartesianMask) {
    CVec khat(n_), img(n_);
    for (int i = 0; i < frames_; ++i) {
      const auto& gi = grid_index_[i];
      for (int j = 0; j < C; ++j) {
        khat.setZero();
        Eigen::Index base = sample_index(i, j, 0, 0);
        for (int t = 0; t < L * m; ++t) khat(gi[t]) += b(base + t);
        fft_->backward(khat.data(), img.data());
        x.col(i) += acq_.coil_maps.col(j).conjugate().cwiseProduct(img);
      }
    }
    return x;
  }

  Vec kx, ky;
  CMat acc(grid_, grid_);
  for (int i = 0; i < frames_; ++i) {
    for (int j = 0; j < C; ++j) {
      acc.setZero();
      for (int sp = 0; sp < L; ++sp) {
        spoke_coords(i, sp, kx, ky);
        nudft_spoke_adjoint(b.segment(sample_index(i, j, sp, 0), m), kx, ky, acc);
      }
      // acc is (row, col); flatten row-major to match the pixel layout
      for (int r = 0; r < grid_; ++r)
        for (int c = 0; c < grid_; ++c)
          x(r * grid_ + c, i) += std::conj(acq_.coil_maps(r * grid_ + c, j)) * acc(r, c);
    }
  }
  return x;
}

CVec add_noise(const CVec& b, double noise_std, uint64_t seed) {
  if (noise_std < 0) throw InvalidArgument("noise std must be non-negative");
  if (noise_std == 0) return b;
  CVec out(b.size());
  const double s = noise_std / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    auto [g1, g2] = rng::gaussian_pair(seed, static_cast<uint64_t>(i));
    out(i) = b(i) + cd(s * g1, s * g2);
  }
  return out;
}

CMat extract_navigators(const CVec& b, const MeasurementOperator& op, int use_navs) {
  const auto& acq = op.acq();
  const auto want = default_nav_angles(use_navs);
  const auto have = default_nav_angles(acq.nav_count);
  std::vector<int> spokes;
  for (double w : want) {
    int found = -1;
    for (size_t s = 0; s < have.size(); ++s)
      if (have[s] == w) found = static_cast<int>(s);
    if (found < 0)
      throw InvalidArgument("navigator subset not available in this acquisition");
    spokes.push_back(found);
  }

  const int m = acq.samples_per_spoke;
  const int C = acq.coils;
  CMat z(static_cast<Eigen::Index>(spokes.size()) * m * C, op.frames());
  for (int i = 0; i < op.frames(); ++i) {
    Eigen::Index row = 0;
    for (int j = 0; j < C; ++j)
      for (int sp : spokes) {
        z.col(i).segment(row, m) = b.segment(op.sample_index(i, j, sp, 0), m);
        row += m;
      }
  }
  return z;
}

}  // namespace lapis
