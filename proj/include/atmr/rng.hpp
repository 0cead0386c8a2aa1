#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace atmr {

// Deterministic random source. All derived draws (uniform reals, bounded
// indices, coin flips) are computed from the raw 64-bit engine output with
// integer arithmetic only, so a given seed produces the same stream on every
// platform and standard library. Never use std::uniform_*_distribution with
// this engine inside the library; those are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n). Rejection sampling keeps the result exactly
    // uniform for any n.
    std::size_t index(std::size_t n) {
        if (n == 0) {
            throw std::invalid_argument("Rng::index: n must be positive");
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) {
            v = engine_();
        }
        return static_cast<std::size_t>(v % n);
    }

    // Fair coin flip; consumes one engine draw.
    bool coin() {
        return (engine_() & 1u) != 0;
    }

    // Fisher-Yates shuffle, deterministic for a given seed and length.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace atmr
