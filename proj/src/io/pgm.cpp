#include "io/pgm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "core/errors.hpp"

namespace lapis {

void write_pgm(const std::string& path, const Vec& pixels, int grid, double wmin,
               double wmax) {
  if (pixels.size() != static_cast<Eigen::Index>(grid) * grid)
    throw DimensionError("pixel count does not match the grid");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << "P5\n" << grid << " " << grid << "\n255\n";
  const double span = wmax - wmin;
  for (Eigen::Index i = 0; i < pixels.size(); ++i) {
    double v = span > 0 ? (pixels(i) - wmin) / span : 0.0;
    int byte = static_cast<int>(std::lround(255.0 * std::min(1.0, std::max(0.0, v))));
    f.put(static_cast<char>(byte));
  }
  if (!f) throw IoError("short write: " + path);

  std::ofstream side(path + ".txt", std::ios::trunc);
  if (!side) throw IoError("cannot open for writing: " + path + ".txt");
  char buf[128];
  std::snprintf(buf, sizeof buf, "window_min %.17g\nwindow_max %.17g\n", wmin, wmax);
  side << buf;
}

void write_pgm_autoscale(const std::string& path, const Vec& pixels, int grid) {
  double lo = pixels.minCoeff(), hi = pixels.maxCoeff();
  write_pgm(path, pixels, grid, lo, hi);
}

}  // namespace lapis
