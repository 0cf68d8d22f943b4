#pragma once

#include <cstdint>
#include <random>

namespace rmaap {

/// splitmix64 finalizer; used to turn (seed, index) pairs into well-mixed
/// engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Deterministic random stream. Wraps std::mt19937_64 (whose output sequence
 * is fixed by the standard) and supplies its own uniform conversions, so a
 * given seed produces the same values on every platform. The distribution
 * helpers in std:: are implementation-defined and deliberately avoided.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], inclusive; unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0)
            return static_cast<std::int64_t>(gen_()); // full 64-bit span
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t draw;
        do {
            draw = gen_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % range);
    }

  private:
    std::mt19937_64 gen_;
};

/// Independent per-index stream: hash(seed, index). Lets trials run in any
/// order, or in parallel, while reproducing the same draws.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
}

} // namespace rmaap
