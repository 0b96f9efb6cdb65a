#include "timebin/rng.hpp"

#include <cmath>
#include <numbers>

namespace timebin {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;  // splitmix64 increment
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    return mix64(root + (stream + 1) * kGamma);
}

std::mt19937_64 engine_at(std::uint64_t stream_seed, std::uint64_t index) {
    return std::mt19937_64(mix64(stream_seed + (index + 1) * kGamma));
}

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

double gaussian(std::mt19937_64& eng) {
    const double u1 = 1.0 - uniform01(eng);  // (0, 1]
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Qubit haar_qubit(std::mt19937_64& eng) {
    while (true) {
        const Complex a{gaussian(eng), gaussian(eng)};
        const Complex b{gaussian(eng), gaussian(eng)};
        const double n2 = std::norm(a) + std::norm(b);
        if (n2 > 1e-12) {
            const double scale = 1.0 / std::sqrt(n2);
            return Qubit{a * scale, b * scale};
        }
    }
}

}  // namespace timebin
