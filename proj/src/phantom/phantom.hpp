#pragma once

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace lapis {

// Respiratory amplitude multiplier over the frame interval [begin, end).
struct Episode {
  int begin = 0;
  int end = 0;
  double multiplier = 1.0;
};

struct PhantomSpec {
  int grid = 64;    // N, square image
  int frames = 300; // k
  double cardiac_rate = 48.7;  // cycles per 1000 frames
  double resp_rate = 11.5;     // cycles per 1000 frames
  double resp_amp = 4.0;       // peak diaphragm displacement in pixels
  std::vector<Episode> episodes;
  uint64_t seed = 0;
  // Per-frame phase series in [0, 2 pi). Left empty, they are filled by
  // default_phases(): a sawtooth cardiac sweep over [0, pi) so the cosine
  // modulation is injective in phase, and a respiratory series with
  // sin(theta_r) = sin^6(pi u) so the diaphragm dwells near end-exhale and
  // deep-inhale states are rare.
  std::vector<double> theta_c;
  std::vector<double> theta_r;
};

void default_phases(PhantomSpec& spec);

struct Phantom {
  int grid = 0;
  CMat truth;        // Casorati matrix, grid^2 x frames, real-valued content
  Vec theta_c;
  Vec theta_r;
  Vec displacement;  // resp_amp * multiplier * sin(theta_r), pixels
};

// Dynamic scene: a static ellipse background, plus an elliptical heart whose
// blood-pool radius is modulated by (1 + 0.3 cos theta_c) and which is
// translated vertically by the episode-scaled diaphragm displacement.
// Series is normalized to max 1 and is deterministic for a fixed seed.
Phantom make_phantom(const PhantomSpec& spec);

}  // namespace lapis
