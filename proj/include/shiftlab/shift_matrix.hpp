#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "shiftlab/graph.hpp"

namespace shiftlab {

enum class ShiftKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
    SignlessLaplacian,
    Transition,
    SignedLaplacian,
};

std::string_view to_string(ShiftKind kind);
ShiftKind parse_shift_kind(const std::string& text);

// Dense shift matrix tagged with its kind. All kinds except the raw
// transition matrix are symmetric by construction (built entrywise from the
// same weight value on both sides, never symmetrized post hoc).
struct ShiftMatrix {
    ShiftKind kind = ShiftKind::Adjacency;
    Eigen::MatrixXd entries;
    bool symmetric = true;

    int dim() const { return static_cast<int>(entries.rows()); }
};

// Builds the requested shift matrix:
//   Adjacency           W
//   Laplacian           D - W                      (nonnegative weights only)
//   NormalizedLaplacian D^{-1/2} (D - W) D^{-1/2}  (nonnegative, no isolated vertices)
//   SignlessLaplacian   D + W
//   Transition          D^{-1} W                   (nonnegative, no isolated vertices)
//   SignedLaplacian     D_sign - W with D_sign = diag(sum_j |w_ij|)
// where D = diag(sum_j w_ij). Throws SignedInputError / IsolatedVertexError
// on precondition violations. The Laplacian diagonal is the running sum of
// the row's off-diagonal weights, so row sums cancel exactly when
// accumulated in index order.
ShiftMatrix build_shift(const Graph& g, ShiftKind kind);

// Returns D^{-1/2} W D^{-1/2}, computed entrywise as sqrt(t_ij * t_ji).
// Similar to T, hence the same eigenvalues, but symmetric, which unlocks the
// symmetric eigensolver. Throws WrongKindError unless t.kind == Transition.
ShiftMatrix symmetrize_transition(const ShiftMatrix& t);

}  // namespace shiftlab
