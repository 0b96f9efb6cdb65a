#pragma once

#include <cstdint>
#include <random>

#include "timebin/state.hpp"

namespace timebin {

// Seed derivation and per-trial draws. The scheme is documented so report
// files are reproducible bit for bit:
//   - mix64 is the splitmix64 finalizer (a bijective 64-bit scrambler),
//   - stream seeds come from derive_seed(root, stream),
//   - each trial gets a fresh mt19937_64 from engine_at(stream_seed, index),
//   - uniform doubles use the top 53 bits of one engine output,
//   - Gaussians use Box-Muller (two uniforms per call, cosine branch).
// Trials therefore depend only on (root seed, stream, trial index) and can
// be evaluated in any order or thread count with identical results.

std::uint64_t mix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

std::mt19937_64 engine_at(std::uint64_t stream_seed, std::uint64_t index);

// Uniform in [0, 1).
double uniform01(std::mt19937_64& eng);

// Uniform in [lo, hi).
double uniform(std::mt19937_64& eng, double lo, double hi);

// Standard normal deviate.
double gaussian(std::mt19937_64& eng);

// Haar-random qubit: two complex Gaussians, normalized. Draw order:
// Re(alpha), Im(alpha), Re(beta), Im(beta).
Qubit haar_qubit(std::mt19937_64& eng);

}  // namespace timebin
