#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io/ini.hpp"
#include "laplacian/laplacian.hpp"
#include "phantom/acquisition.hpp"
#include "phantom/phantom.hpp"

namespace lapis {

// Fully resolved run configuration. Parsed from an INI file with a closed
// key schema: unknown sections or keys are hard errors.
struct RunConfig {
  uint64_t seed = 1234;
  std::string out_dir = "out";

  PhantomSpec phantom;
  AcquisitionSpec acq;
  double snr_db = 0.0;  // > 0: derive noise_std from the noiseless signal RMS

  IrlsParams irls;

  double lambda = 1.2;
  int rank = 30;
  double cg_tol = 1e-6;
  int cg_max_iter = 100;

  int n_resp = 4;
  int n_card = 8;

  // experiment section
  int knn_k = 2;
  double threshold_scale = 1.0;
  std::vector<double> budgets{1.0, 0.55, 0.35};
  double eval_fraction = 0.25;
  double high_motion_quantile = 0.75;
  int outlier_frame = -1;  // -1: middle frame
  double outlier_mult = 4.0;

  static RunConfig load(const std::string& path);
  static RunConfig from_ini(const IniFile& ini);

  // Canonical serialization of every resolved value ("section.key = value"
  // lines); embedded in run manifests.
  std::string echo() const;
};

class IniFile;

}  // namespace lapis
