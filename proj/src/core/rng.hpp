#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace lapis::rng {

// Counter-based generator: every draw is a pure function of (seed, index).
// Streams can be sliced and replayed in any order, which keeps parallel and
// sequential schedules bit-identical.

uint64_t mix(uint64_t seed, uint64_t index);

// Uniform double in [0, 1).
double uniform(uint64_t seed, uint64_t index);

// Two independent unit normals, consuming draw indices 2*index and 2*index+1.
std::pair<double, double> gaussian_pair(uint64_t seed, uint64_t index);

// Derive an independent sub-stream seed from a stage tag.
uint64_t derive(uint64_t seed, std::string_view tag);

}  // namespace lapis::rng
