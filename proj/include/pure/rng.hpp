#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pure/common.hpp"

namespace pure {

// Seeded random source. Distributions are implemented by hand on top of
// mt19937_64 so that draw sequences are identical across standard library
// implementations (std::uniform_real_distribution et al. are not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in [0, n), unbiased via rejection.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) throw ConfigError("uniform_int: empty range");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller cosine branch; the sine branch is discarded so the stream
    // needs no carried state.
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer; derives independent stream seeds from a master seed.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace pure
