#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace shiftlab {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Undirected simple weighted graph. Edges are stored canonically
// (u < v, sorted lexicographically, nonzero weights), so symmetry holds by
// construction and two graphs are equal iff their representations are.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    // Takes any orientation of the endpoints and canonicalizes. Throws
    // std::invalid_argument on self-loops, duplicate pairs, out-of-range
    // endpoints, or zero/non-finite weights.
    Graph(int n, std::vector<WeightedEdge> edges);

    static Graph empty(int n) { return Graph(n, {}); }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    // True when every stored weight is exactly 1.0.
    bool is_unit_weighted() const;

    // Sum of incident weights per vertex (the diagonal of the degree matrix).
    std::vector<double> weighted_degrees() const;

    // Number of incident edges per vertex, ignoring weights.
    std::vector<int> edge_degrees() const;

    // Neighbor lists with weights; index = vertex, entries sorted by neighbor.
    std::vector<std::vector<std::pair<int, double>>> adjacency_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<WeightedEdge> edges_;
};

// True iff the graph has exactly one connected component. Any nonzero
// weight, including negative, counts as adjacency.
bool is_connected(const Graph& g);

// Complement on the same vertex set: edges become non-edges and vice versa,
// all weights 1. Rejects non-unit-weight input (complementation is only
// meaningful for unweighted graphs here).
Graph complement(const Graph& g);

// Structural balance of a signed graph: true iff some vertex signing
// s : V -> {+1, -1} satisfies sign(w_uv) = s(u) * s(v) on every edge,
// equivalently every cycle has a positive sign product. BFS 2-coloring
// per component; only the signs of the weights matter.
bool is_balanced(const Graph& g);

}  // namespace shiftlab
