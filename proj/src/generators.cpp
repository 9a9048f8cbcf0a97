#include "shiftlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace shiftlab {

namespace {

std::int64_t pair_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Pairs (u, v), u < v, enumerated lexicographically; offset(u) is the index
// of pair (u, u+1).
std::int64_t pair_offset(int u, int n) {
    return static_cast<std::int64_t>(u) * (n - 1) - static_cast<std::int64_t>(u) * (u - 1) / 2;
}

std::pair<int, int> pair_from_index(std::int64_t k, int n) {
    int lo = 0, hi = n - 1;  // largest u with offset(u) <= k
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (pair_offset(mid, n) <= k)
            lo = mid;
        else
            hi = mid - 1;
    }
    const int u = lo;
    const int v = static_cast<int>(k - pair_offset(u, n)) + u + 1;
    return {u, v};
}

double sample_weight(const WeightDistribution& dist, Rng& rng) {
    return std::visit(
        [&rng](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UnitWeight>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, ExponentialWeight>) {
                return rng.next_exponential(d.rate);
            } else if constexpr (std::is_same_v<T, GaussianWeight>) {
                return rng.next_gaussian(d.mean, d.stddev);
            } else {
                return rng.next_bool() ? 1.0 : -1.0;
            }
        },
        dist);
}

void validate_distribution(const WeightDistribution& dist) {
    if (const auto* e = std::get_if<ExponentialWeight>(&dist); e && !(e->rate > 0.0))
        throw std::invalid_argument("WeightDistribution: exponential rate must be > 0");
    if (const auto* g = std::get_if<GaussianWeight>(&dist); g && !(g->stddev > 0.0))
        throw std::invalid_argument("WeightDistribution: gaussian stddev must be > 0");
}

}  // namespace

std::string to_string(const WeightDistribution& dist) {
    char buf[64];
    return std::visit(
        [&buf](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UnitWeight>) {
                return "unit";
            } else if constexpr (std::is_same_v<T, ExponentialWeight>) {
                std::snprintf(buf, sizeof(buf), "exp:%g", d.rate);
                return buf;
            } else if constexpr (std::is_same_v<T, GaussianWeight>) {
                std::snprintf(buf, sizeof(buf), "gauss:%g:%g", d.mean, d.stddev);
                return buf;
            } else {
                return "signed-unit";
            }
        },
        dist);
}

WeightDistribution parse_weight_distribution(const std::string& text) {
    if (text == "unit") return UnitWeight{};
    if (text == "signed-unit") return SignedUnitWeight{};
    const auto bad = [&text]() -> WeightDistribution {
        throw std::invalid_argument("unrecognized weight distribution '" + text +
                                    "' (expected unit, exp:RATE, gauss:MEAN:STDDEV, signed-unit)");
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos) return bad();
    const std::string head = text.substr(0, colon);
    try {
        if (head == "exp") {
            std::size_t used = 0;
            const std::string rest = text.substr(colon + 1);
            const double rate = std::stod(rest, &used);
            if (used != rest.size() || !(rate > 0.0)) return bad();
            return ExponentialWeight{rate};
        }
        if (head == "gauss") {
            const auto colon2 = text.find(':', colon + 1);
            if (colon2 == std::string::npos) return bad();
            std::size_t used1 = 0, used2 = 0;
            const std::string s1 = text.substr(colon + 1, colon2 - colon - 1);
            const std::string s2 = text.substr(colon2 + 1);
            const double mean = std::stod(s1, &used1);
            const double stddev = std::stod(s2, &used2);
            if (used1 != s1.size() || used2 != s2.size() || !(stddev > 0.0)) return bad();
            return GaussianWeight{mean, stddev};
        }
    } catch (const std::logic_error&) {
        return bad();
    }
    return bad();
}

Graph gen_er_gnp(int n, double p_edge, RandomSeed seed) {
    if (n < 1) throw std::invalid_argument("gen_er_gnp: n must be >= 1");
    if (!(p_edge >= 0.0 && p_edge <= 1.0))
        throw std::invalid_argument("gen_er_gnp: p_edge must lie in [0, 1]");
    Rng rng(derive_stream(seed.value, stream_tag::er_gnp));
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p_edge) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph gen_er_gnm(int n, std::int64_t m, RandomSeed seed) {
    if (n < 1) throw std::invalid_argument("gen_er_gnm: n must be >= 1");
    const std::int64_t total = pair_count(n);
    if (m < 0 || m > total)
        throw std::invalid_argument("gen_er_gnm: m must lie in [0, n(n-1)/2]");
    Rng rng(derive_stream(seed.value, stream_tag::er_gnm));
    // Floyd's sampling: m distinct pair indices without replacement.
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2 + 1);
    std::vector<std::int64_t> picks;
    picks.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = total - m; j < total; ++j) {
        const auto t = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
        const std::int64_t pick = chosen.insert(t).second ? t : (chosen.insert(j), j);
        picks.push_back(pick);
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(picks.size());
    for (const std::int64_t k : picks) {
        const auto [u, v] = pair_from_index(k, n);
        edges.push_back({u, v, 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph gen_ws(int n, int k_half, double beta, RandomSeed seed) {
    if (n < 3) throw std::invalid_argument("gen_ws: n must be >= 3");
    if (k_half < 1 || 2 * k_half > n - 1)
        throw std::invalid_argument("gen_ws: k_half must lie in [1, (n-1)/2]");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("gen_ws: beta must lie in [0, 1]");
    Rng rng(derive_stream(seed.value, stream_tag::ws));

    std::vector<std::unordered_set<int>> adj(static_cast<std::size_t>(n));
    const auto add = [&adj](int a, int b) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    };
    const auto remove = [&adj](int a, int b) {
        adj[static_cast<std::size_t>(a)].erase(b);
        adj[static_cast<std::size_t>(b)].erase(a);
    };
    for (int j = 1; j <= k_half; ++j)
        for (int i = 0; i < n; ++i) add(i, (i + j) % n);

    // Rewire ring by ring, nearest neighbors first, keeping endpoint i.
    for (int j = 1; j <= k_half; ++j) {
        for (int i = 0; i < n; ++i) {
            const int old = (i + j) % n;
            if (!adj[static_cast<std::size_t>(i)].count(old)) continue;  // already rewired away
            if (rng.next_unit() >= beta) continue;
            if (adj[static_cast<std::size_t>(i)].size() == static_cast<std::size_t>(n) - 1)
                continue;  // saturated vertex: keep the lattice edge
            int target = -1;
            for (int attempt = 0; attempt < 1024; ++attempt) {
                const auto cand = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                if (cand != i && !adj[static_cast<std::size_t>(i)].count(cand)) {
                    target = cand;
                    break;
                }
            }
            if (target < 0) {
                // Deterministic fallback: enumerate the free endpoints.
                std::vector<int> free;
                for (int cand = 0; cand < n; ++cand)
                    if (cand != i && !adj[static_cast<std::size_t>(i)].count(cand))
                        free.push_back(cand);
                target = free[rng.next_below(free.size())];
            }
            remove(i, old);
            add(i, target);
        }
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k_half));
    for (int u = 0; u < n; ++u)
        for (const int v : adj[static_cast<std::size_t>(u)])
            if (u < v) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph gen_ba(int n, int m0, int m, RandomSeed seed) {
    if (n < 1) throw std::invalid_argument("gen_ba: n must be >= 1");
    if (m < 1 || m > m0) throw std::invalid_argument("gen_ba: need 1 <= m <= m0");
    if (m0 > n) throw std::invalid_argument("gen_ba: need m0 <= n");
    Rng rng(derive_stream(seed.value, stream_tag::ba));

    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n - m0) * static_cast<std::size_t>(m));
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    for (int t = m0; t < n; ++t) {
        // Attachment weights degree + 1, frozen at the start of the step;
        // m distinct targets drawn without replacement.
        std::int64_t total = 0;
        for (int u = 0; u < t; ++u) total += degree[static_cast<std::size_t>(u)] + 1;
        std::fill(taken.begin(), taken.begin() + t, 0);
        std::vector<int> targets;
        targets.reserve(static_cast<std::size_t>(m));
        for (int pick = 0; pick < m; ++pick) {
            auto r = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(total)));
            int chosen = -1;
            for (int u = 0; u < t; ++u) {
                if (taken[static_cast<std::size_t>(u)]) continue;
                r -= degree[static_cast<std::size_t>(u)] + 1;
                if (r < 0) {
                    chosen = u;
                    break;
                }
            }
            taken[static_cast<std::size_t>(chosen)] = 1;
            total -= degree[static_cast<std::size_t>(chosen)] + 1;
            targets.push_back(chosen);
        }
        for (const int u : targets) {
            edges.push_back({u, t, 1.0});
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(t)];
        }
    }
    return Graph(n, std::move(edges));
}

Graph apply_weights(const Graph& g, const WeightDistribution& dist, RandomSeed seed) {
    validate_distribution(dist);
    Rng rng(derive_stream(seed.value, stream_tag::weights));
    std::vector<WeightedEdge> edges = g.edges();
    for (auto& e : edges) e.w = sample_weight(dist, rng);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph apply_balanced_signs(const Graph& g, RandomSeed seed) {
    Rng rng(derive_stream(seed.value, stream_tag::partition));
    std::vector<char> side(static_cast<std::size_t>(g.vertex_count()));
    for (auto& s : side) s = rng.next_bool() ? 1 : 0;
    std::vector<WeightedEdge> edges = g.edges();
    for (auto& e : edges)
        e.w = side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)] ? 1.0
                                                                                        : -1.0;
    return Graph(g.vertex_count(), std::move(edges));
}

Graph gen_balanced_signed(int n, std::int64_t m, RandomSeed seed) {
    const Graph topology = gen_er_gnm(n, m, derive_stream(seed.value, stream_tag::topology));
    return apply_balanced_signs(topology, seed);
}

}  // namespace shiftlab
