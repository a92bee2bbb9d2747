#pragma once

#include <cstdint>
#include <random>

namespace polyjis {

/// Deterministic uniform draws on top of std::mt19937_64. The standard fixes
/// the engine's output sequence, so deriving doubles from raw 64-bit words
/// keeps results identical across platforms (distributions from <random> are
/// implementation-defined and would not).
struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::mt19937_64 engine;

    double uniform01() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return (engine() & 1u) != 0; }
};

}  // namespace polyjis
