#include "shiftlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace shiftlab {

Graph::Graph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("Graph: endpoint out of range (" + std::to_string(e.u) +
                                        ", " + std::to_string(e.v) + ")");
        if (e.w == 0.0 || !std::isfinite(e.w))
            throw std::invalid_argument("Graph: edge weight must be nonzero and finite");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(edges_[i].u) +
                                        ", " + std::to_string(edges_[i].v) + ")");
    }
}

bool Graph::is_unit_weighted() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const WeightedEdge& e) { return e.w == 1.0; });
}

std::vector<double> Graph::weighted_degrees() const {
    std::vector<double> deg(static_cast<std::size_t>(n_), 0.0);
    for (const auto& e : edges_) {
        deg[static_cast<std::size_t>(e.u)] += e.w;
        deg[static_cast<std::size_t>(e.v)] += e.w;
    }
    return deg;
}

std::vector<int> Graph::edge_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency_list() const {
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

namespace {

// Union-find with path halving.
struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // Returns true when the union merged two distinct components.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

bool is_connected(const Graph& g) {
    DisjointSet ds(g.vertex_count());
    int components = g.vertex_count();
    for (const auto& e : g.edges()) {
        if (ds.unite(e.u, e.v)) --components;
    }
    return components == 1;
}

Graph complement(const Graph& g) {
    if (!g.is_unit_weighted())
        throw std::invalid_argument("complement: graph must be unweighted (all weights 1)");
    const int n = g.vertex_count();
    // Mark present pairs, then emit the rest.
    std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges())
        present[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(e.v)] = 1;
    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 -
                  g.edge_count());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(v)])
                edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

bool is_balanced(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency_list();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (side[static_cast<std::size_t>(start)] != -1) continue;
        side[static_cast<std::size_t>(start)] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
                const int expected =
                    w < 0 ? 1 - side[static_cast<std::size_t>(u)] : side[static_cast<std::size_t>(u)];
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = expected;
                    queue.push(v);
                } else if (side[static_cast<std::size_t>(v)] != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace shiftlab
