#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace qkd {

/// splitmix64 finalizer; spreads consecutive inputs across the 64-bit space.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for a named sub-stream of a master seed. Sub-streams derived with
/// distinct stream ids are statistically independent, so protocol parties
/// can draw in any order without affecting one another.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) + stream);
}

/// Seedable pseudo-random stream. Wraps std::mt19937_64 but exposes only
/// draws whose results are fully determined by the engine output, so a given
/// seed reproduces bit-identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint8_t bit() { return static_cast<std::uint8_t>(engine_() & 1u); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = (0u - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold)
                return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qkd
