#pragma once

#include <cmath>
#include <cstdint>

namespace adsq {

// Counter-based randomness built on splitmix64. Every draw is a pure
// function of (seed, counters), so disorder ensembles are reproducible
// and independent of evaluation order or threading.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// uniform in [0, 1)
inline double uniform01(std::uint64_t key) {
    return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

// Stateless stream keyed by (seed, sample); index selects the draw.
struct CounterRng {
    std::uint64_t stream;

    CounterRng(std::uint64_t seed, std::uint64_t sample = 0)
        : stream(splitmix64(seed ^ splitmix64(sample))) {}

    double uniform(std::uint64_t index) const { return uniform01(stream ^ (index + 1)); }

    // standard normal via Box-Muller from two counter draws
    double normal(std::uint64_t index) const {
        double u1 = uniform(2 * index);
        double u2 = uniform(2 * index + 1);
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

}  // namespace adsq
