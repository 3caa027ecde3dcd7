#pragma once

#include <cmath>
#include <cstdint>

namespace ndde {

/// Deterministic counter-based random source. A draw is a pure function of
/// (seed, stream, counter), so independent streams can be split off without
/// sharing state and any draw can be replayed from its index. Statistical
/// quality is that of SplitMix64 output mixing; this is not a cryptographic
/// generator.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    /// Child generator for an independent substream.
    [[nodiscard]] CounterRng split(std::uint64_t substream) const {
        return CounterRng(seed_, mix_(stream_ * 0x9e3779b97f4a7c15ULL + substream + 1));
    }

    /// Raw 64-bit draw at the given counter.
    [[nodiscard]] std::uint64_t bits(std::uint64_t counter) const {
        return mix_(mix_(seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1)) ^ mix_(stream_));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    [[nodiscard]] double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    [[nodiscard]] double uniform_in(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

private:
    static std::uint64_t mix_(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace ndde
