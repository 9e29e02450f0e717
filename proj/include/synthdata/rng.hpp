#pragma once

// Deterministic, seedable random stream.
//
// Algorithm (bit-reproducible across platforms, integer-only core):
//   base    = mix13(seed)
//   state_i = base + (counter_i + 1) * 0x9E3779B97F4A7C15   (64-bit wrap)
//   out_i   = mix13(state_i)
// where mix13 is Stafford's variant 13 of the SplitMix64 finalizer:
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27;  z *= 0x94D049BB133111EB
//   z ^= z >> 31
// This is the SplitMix64 sequence started at `base`. Sub-stream s begins at
// counter s * 2^40, i.e. sub-streams of one seed are disjoint windows of a
// single period-2^64 orbit and cannot overlap within their first 2^40 draws.
//
// Test vectors (seed 42, sub-stream 0, first three next_u64 values):
//   0x989b3f130a063869, 0x290db4bf2570ded7, 0x2a990be63a01b2d5

#include <cstdint>

#include "synthdata/special.hpp"

namespace synthdata {

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t substream = 0)
        : seed_(seed), base_(mix(seed)), counter_(substream << kSubstreamShift) {}

    /// Next raw 64-bit draw.
    std::uint64_t next_u64() {
        ++counter_;
        return mix(base_ + counter_ * kGolden);
    }

    /// Uniform double strictly inside (0,1), 53-bit resolution. Never returns
    /// an exact 0 or 1, so inverse-CDF transforms stay in-domain.
    double next_uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_uniform01();
    }

    /// Uniform index in [0, n). Uses 128-bit multiply-shift; bias is below
    /// 2^-64 for any n representable here.
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal draw via the inverse-CDF transform of one uniform.
    /// One draw consumes exactly one counter step.
    double next_standard_normal() { return normal_quantile(next_uniform01()); }

    /// A stream over the sub-stream window `index` of the same seed.
    /// Disjoint from every other sub-stream for at least 2^40 draws each.
    RngStream substream(std::uint64_t index) const { return RngStream(seed_, index); }

    std::uint64_t seed() const { return seed_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr unsigned kSubstreamShift = 40;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t base_;
    std::uint64_t counter_;
};

}  // namespace synthdata
