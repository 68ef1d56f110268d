#pragma once

#include <cstdint>
#include <random>

namespace glg {

// Deterministic uniform source. std::mt19937_64 output is pinned by the
// standard, and the explicit 53-bit mapping below avoids the
// implementation-defined behaviour of std::uniform_real_distribution, so
// identical seeds produce identical datasets on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [0, bound), bound >= 1. Rejection-free modulo is fine
    // here: bounds are tiny relative to 2^64, and reproducibility matters more
    // than the (immeasurable) modulo bias.
    std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace glg
