#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "shiftlab/graph.hpp"
#include "shiftlab/rng.hpp"

namespace shiftlab {

// Seed for a generator invocation. Same seed + same parameters gives a
// bit-identical graph within one build, independent of thread count.
struct RandomSeed {
    std::uint64_t value = 0;

    constexpr RandomSeed(std::uint64_t v = 0) : value(v) {}  // NOLINT(google-explicit-constructor)

    friend bool operator==(const RandomSeed&, const RandomSeed&) = default;
};

struct UnitWeight {
    friend bool operator==(const UnitWeight&, const UnitWeight&) = default;
};
struct ExponentialWeight {
    double rate = 1.0;  // > 0
    friend bool operator==(const ExponentialWeight&, const ExponentialWeight&) = default;
};
struct GaussianWeight {
    double mean = 0.0;
    double stddev = 1.0;  // > 0
    friend bool operator==(const GaussianWeight&, const GaussianWeight&) = default;
};
struct SignedUnitWeight {  // +1 or -1 with probability 1/2 each
    friend bool operator==(const SignedUnitWeight&, const SignedUnitWeight&) = default;
};

using WeightDistribution =
    std::variant<UnitWeight, ExponentialWeight, GaussianWeight, SignedUnitWeight>;

std::string to_string(const WeightDistribution& dist);

// Accepts "unit", "exp:RATE", "gauss:MEAN:STDDEV", "signed-unit".
WeightDistribution parse_weight_distribution(const std::string& text);

// Erdos-Renyi G(n, p): each of the C(n,2) pairs is an edge independently
// with probability p_edge; unit weights.
Graph gen_er_gnp(int n, double p_edge, RandomSeed seed);

// Erdos-Renyi G(n, m): exactly m edges drawn uniformly without replacement
// from the C(n,2) pairs; unit weights.
Graph gen_er_gnm(int n, std::int64_t m, RandomSeed seed);

// Watts-Strogatz: ring lattice where each vertex connects to its k_half
// nearest neighbors per side (degree 2*k_half), then each lattice edge is
// rewired with probability beta, keeping its lower endpoint and choosing a
// fresh non-duplicate, non-self-loop endpoint uniformly. Edge count is
// n * k_half for every beta.
Graph gen_ws(int n, int k_half, double beta, RandomSeed seed);

// Barabasi-Albert preferential attachment: m0 initial isolated vertices;
// each later vertex attaches m edges to distinct existing vertices drawn
// with probability proportional to degree + 1. Total edges (n - m0) * m.
Graph gen_ba(int n, int m0, int m, RandomSeed seed);

// Resamples every edge weight independently from dist, keeping the topology.
// Exponential draws are strictly positive; Gaussian draws may be negative
// (yielding a signed graph) but never exactly zero.
Graph apply_weights(const Graph& g, const WeightDistribution& dist, RandomSeed seed);

// Random bipartition signing: vertices split into two sets uniformly at
// random, intra-set edges get weight +1, cross-set edges -1. The result is
// balanced for any topology.
Graph apply_balanced_signs(const Graph& g, RandomSeed seed);

// G(n, m) topology with balanced bipartition signs.
Graph gen_balanced_signed(int n, std::int64_t m, RandomSeed seed);

}  // namespace shiftlab
