#pragma once

#include <string>

#include "core/types.hpp"

namespace lapis {

// 8-bit binary PGM of an N x N image given in row-major pixel order, windowed
// to [wmin, wmax]. The window is recorded in a sidecar text file at
// path + ".txt" so the preview remains interpretable.
void write_pgm(const std::string& path, const Vec& pixels, int grid, double wmin,
               double wmax);

// Convenience: min-max window of the image itself.
void write_pgm_autoscale(const std::string& path, const Vec& pixels, int grid);

}  // namespace lapis
