#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace wmofss {

// The engine is fully specified by the standard; the distribution helpers below
// are written out so that streams are identical across standard libraries.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed of sub-stream `index` under `master`. Sub-streams of one master are
/// independent of each other and of the order in which they are requested.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return mix64(mix64(master) ^ mix64(index + 0x632BE59BD9B4E019ull));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine &rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal via Box-Muller (one variate per call).
inline double standard_normal(Engine &rng)
{
    double u1 = uniform01(rng);
    while (u1 <= 0.0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Unit-rate exponential variate.
inline double standard_exponential(Engine &rng)
{
    double u = uniform01(rng);
    while (u <= 0.0) {
        u = uniform01(rng);
    }
    return -std::log(u);
}

} // namespace wmofss
