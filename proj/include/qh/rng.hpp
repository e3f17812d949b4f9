#pragma once

#include <cstdint>

namespace qh {

/// SplitMix64 generator; split() derives an independent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do
            v = next();
        while (v >= limit);
        return v % n;
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

/// Seed of trial number `trial` under a base seed, stable across runs.
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial)
{
    SplitMix64 g(base ^ (0x5851f42d4c957f2dULL * (trial + 1)));
    return g.next();
}

} // namespace qh
