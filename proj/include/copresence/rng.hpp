// Seeded draws used by the generator and the null model. All draws go through
// these helpers so a fixed seed reproduces runs bit-for-bit.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace copresence {

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double exponential_draw(std::mt19937_64& rng, double mean)
{
    return -mean * std::log1p(-uniform_unit(rng));
}

}  // namespace copresence
