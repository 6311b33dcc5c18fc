#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/types.hpp"
#include "phantom/fourier.hpp"
#include "recon/operator.hpp"

namespace lapis {

enum class SamplingMode { RadialNudft, CartesianMask };

// Navigated golden-angle radial acquisition. Each frame plays the same
// nav_count navigator spokes followed by golden-angle spokes that continue
// the 111.246117975 degree increment across frames.
struct AcquisitionSpec {
  int grid = 64;             // N, must match the image series
  int lines_per_frame = 10;  // L, navigators included
  int nav_count = 4;         // 1, 2 or 4
  int samples_per_spoke = 64;
  int coils = 4;
  double noise_std = 0.0;    // std of the complex noise per sample
  SamplingMode mode = SamplingMode::CartesianMask;
  double golden_offset_deg = 0.0;
  CMat coil_maps;            // pixels x coils; filled by make_coil_maps if empty
};

constexpr double kGoldenAngleDeg = 111.246117975;

std::vector<double> default_nav_angles(int nav_count);  // {0,45,90,135} / {0,90} / {0}

// Smooth raised-cosine sensitivity lobes with gentle phase ramps; for four
// coils the lobes sit on the four image quadrants. Nowhere jointly zero.
CMat make_coil_maps(int grid, int coils);

class MeasurementOperator : public FrameOperator {
public:
  MeasurementOperator(const AcquisitionSpec& acq, int frames);

  int pixels() const override { return n_; }
  int frames() const override { return frames_; }
  Eigen::Index samples() const override;
  int grid() const { return grid_; }
  const AcquisitionSpec& acq() const { return acq_; }

  // Sample order: frame-major, then coil, spoke, sample — matching a
  // (frames, coils, lines, samples) complex array on disk.
  CVec forward(const CMat& x) const override;
  CMat adjoint(const CVec& b) const override;

  // Spoke angles of one frame, navigators first.
  const std::vector<double>& frame_angles(int frame) const { return angles_deg_[frame]; }
  // Continuous sample coordinates of one spoke (kx with columns, ky with rows);
  // in Cartesian mode these are the rounded grid frequencies.
  void spoke_coords(int frame, int spoke, Vec& kx, Vec& ky) const;

  Eigen::Index sample_index(int frame, int coil, int spoke, int sample) const;

private:
  AcquisitionSpec acq_;
  int grid_;
  int n_;
  int frames_;
  std::vector<std::vector<double>> angles_deg_;  // frames x L
  Vec rho_;                                      // per-sample spoke radius
  std::vector<std::vector<int>> grid_index_;     // frames x (L*M), Cartesian mode
  std::unique_ptr<Fft2> fft_;                    // Cartesian mode only
};

// i.i.d. circular complex Gaussian with the given per-sample std; the draw for
// each sample depends only on (seed, flat index).
CVec add_noise(const CVec& b, double noise_std, uint64_t seed);

// Stacks the navigator samples of each frame over coils (coil-major, then
// spoke, then sample) into one column per frame. use_navs selects the fixed
// subsets {0,45,90,135} -> {0,90} -> {0}.
CMat extract_navigators(const CVec& b, const MeasurementOperator& op, int use_navs);

}  // namespace lapis
