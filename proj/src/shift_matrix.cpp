#include "shiftlab/shift_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftlab/errors.hpp"

namespace shiftlab {

std::string_view to_string(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::Adjacency: return "adjacency";
        case ShiftKind::Laplacian: return "laplacian";
        case ShiftKind::NormalizedLaplacian: return "normalized-laplacian";
        case ShiftKind::SignlessLaplacian: return "signless-laplacian";
        case ShiftKind::Transition: return "transition";
        case ShiftKind::SignedLaplacian: return "signed-laplacian";
    }
    return "?";
}

ShiftKind parse_shift_kind(const std::string& text) {
    for (const ShiftKind kind :
         {ShiftKind::Adjacency, ShiftKind::Laplacian, ShiftKind::NormalizedLaplacian,
          ShiftKind::SignlessLaplacian, ShiftKind::Transition, ShiftKind::SignedLaplacian}) {
        if (text == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unrecognized shift kind '" + text + "'");
}

namespace {

bool needs_nonnegative(ShiftKind kind) {
    return kind == ShiftKind::Laplacian || kind == ShiftKind::NormalizedLaplacian ||
           kind == ShiftKind::Transition;
}

bool needs_positive_degrees(ShiftKind kind) {
    return kind == ShiftKind::NormalizedLaplacian || kind == ShiftKind::Transition;
}

}  // namespace

ShiftMatrix build_shift(const Graph& g, ShiftKind kind) {
    const int n = g.vertex_count();
    if (needs_nonnegative(kind)) {
        for (const auto& e : g.edges())
            if (e.w < 0.0)
                throw SignedInputError(std::string(to_string(kind)) +
                                       " requires nonnegative weights; use signed-laplacian");
    }

    Eigen::MatrixXd weight = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        weight(e.u, e.v) = e.w;
        weight(e.v, e.u) = e.w;
    }
    // Row sums accumulated in ascending column order; the Laplacian row-sum
    // identity below depends on this order.
    Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd abs_degree = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            degree(i) += weight(i, j);
            abs_degree(i) += std::abs(weight(i, j));
        }
    }
    if (needs_positive_degrees(kind)) {
        for (int i = 0; i < n; ++i)
            if (degree(i) == 0.0)
                throw IsolatedVertexError(std::string(to_string(kind)) +
                                          " undefined: vertex " + std::to_string(i) +
                                          " has degree 0");
    }

    ShiftMatrix s;
    s.kind = kind;
    s.symmetric = kind != ShiftKind::Transition;
    switch (kind) {
        case ShiftKind::Adjacency:
            s.entries = std::move(weight);
            break;
        case ShiftKind::Laplacian:
            s.entries = -weight;
            s.entries.diagonal() = degree;
            break;
        case ShiftKind::SignlessLaplacian:
            s.entries = weight;
            s.entries.diagonal() = degree;
            break;
        case ShiftKind::SignedLaplacian:
            s.entries = -weight;
            s.entries.diagonal() = abs_degree;
            break;
        case ShiftKind::NormalizedLaplacian: {
            s.entries = Eigen::MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                s.entries(i, i) = 1.0;
                for (int j = 0; j < n; ++j)
                    if (j != i && weight(i, j) != 0.0)
                        s.entries(i, j) = -weight(i, j) / std::sqrt(degree(i) * degree(j));
            }
            break;
        }
        case ShiftKind::Transition:
            s.entries = weight.array().colwise() / degree.array();
            break;
    }
    return s;
}

ShiftMatrix symmetrize_transition(const ShiftMatrix& t) {
    if (t.kind != ShiftKind::Transition)
        throw WrongKindError("symmetrize_transition expects a transition matrix, got " +
                             std::string(to_string(t.kind)));
    ShiftMatrix s;
    s.kind = ShiftKind::Transition;
    s.symmetric = true;
    // t_ij = w_ij / d_i, t_ji = w_ij / d_j  =>  sqrt(t_ij t_ji) = w_ij / sqrt(d_i d_j).
    s.entries = (t.entries.array() * t.entries.transpose().array()).sqrt();
    return s;
}

}  // namespace shiftlab
