#include "core/rng.hpp"

#include <cmath>

namespace lapis::rng {

namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

uint64_t splitmix_fin(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t mix(uint64_t seed, uint64_t index) {
  return splitmix_fin(splitmix_fin(seed + kGamma) ^ ((index + 1) * kGamma));
}

double uniform(uint64_t seed, uint64_t index) {
  return static_cast<double>(mix(seed, index) >> 11) * 0x1.0p-53;
}

std::pair<double, double> gaussian_pair(uint64_t seed, uint64_t index) {
  // Box-Muller; u1 shifted away from zero so the log stays finite.
  double u1 = uniform(seed, 2 * index);
  double u2 = uniform(seed, 2 * index + 1);
  double r = std::sqrt(-2.0 * std::log1p(-u1));
  double phi = 2.0 * M_PI * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

uint64_t derive(uint64_t seed, std::string_view tag) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the tag bytes
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return splitmix_fin(seed ^ h);
}

}  // namespace lapis::rng
