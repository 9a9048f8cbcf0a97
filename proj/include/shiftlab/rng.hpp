#pragma once

#include <cmath>
#include <cstdint>

namespace shiftlab {

// SplitMix64 output mixer (Vigna / Steele et al. constants). Statistically
// strong for the stream lengths used here and trivially reproducible across
// platforms, which is what the seeding contract demands.
constexpr std::uint64_t splitmix_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent substream seed from (seed, tag). Chain calls to
// mix in more than one tag, e.g. derive_stream(derive_stream(s, point), trial).
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag) {
    return splitmix_mix(seed + 0x9e3779b97f4a7c15ULL * (tag + 1));
}

constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_stream(derive_stream(seed, a), b);
}

// Seedable 64-bit generator (SplitMix64). Every randomized operation in the
// library owns one of these, seeded through derive_stream; no shared mutable
// RNG state exists anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix_mix(state_);
    }

    // Unbiased integer in [0, bound); bound must be >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    // Exponential(rate) by inversion; strictly positive by construction.
    double next_exponential(double rate) {
        double u;
        do {
            u = next_unit();
        } while (u == 0.0);
        return -std::log1p(-u) / rate;
    }

    // Gaussian(mean, stddev) via the Marsaglia polar method. A draw of
    // exactly 0.0 is rejected: a zero weight would silently delete an edge.
    double next_gaussian(double mean, double stddev) {
        for (;;) {
            double v1, v2, s;
            do {
                v1 = 2.0 * next_unit() - 1.0;
                v2 = 2.0 * next_unit() - 1.0;
                s = v1 * v1 + v2 * v2;
            } while (s >= 1.0 || s == 0.0);
            const double x = mean + stddev * v1 * std::sqrt(-2.0 * std::log(s) / s);
            if (x != 0.0) return x;
        }
    }

private:
    std::uint64_t state_;
};

// Purpose tags for substream derivation. Values are arbitrary but frozen:
// changing them changes every generated graph.
namespace stream_tag {
inline constexpr std::uint64_t er_gnp = 0x01;
inline constexpr std::uint64_t er_gnm = 0x02;
inline constexpr std::uint64_t ws = 0x03;
inline constexpr std::uint64_t ba = 0x04;
inline constexpr std::uint64_t weights = 0x05;
inline constexpr std::uint64_t partition = 0x06;
inline constexpr std::uint64_t topology = 0x07;
}  // namespace stream_tag

}  // namespace shiftlab
