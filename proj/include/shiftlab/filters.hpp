#pragma once

#include <Eigen/Dense>

#include "shiftlab/shift_matrix.hpp"
#include "shiftlab/spectral.hpp"

namespace shiftlab {

// Linear shift-invariance test: true iff
//   ||H*S - S*H||_inf <= tol * (1 + ||H||_inf * ||S||_inf).
bool commutes(const Eigen::MatrixXd& h, const ShiftMatrix& s, double tol);

struct FilterFit {
    bool representable = false;
    // Polynomial coefficients in ascending powers, padded to length dim;
    // H ~= sum_k coefficients[k] * S^k when representable.
    Eigen::VectorXd coefficients;
    double residual = 0.0;          // ||H - sum_k c_k S^k||_inf of the fit
    int violating_eigenspace = -1;  // cluster index when not representable
};

// Recovers the polynomial-in-S representation of a commuting filter H.
// Shift-enabled S always succeeds; with repeated eigenvalues H must act as a
// scalar on each repeated eigenspace, otherwise the fit reports
// representable = false and names the violating eigenspace. Raises
// DoesNotCommuteError when H fails the commutation test at tol.
FilterFit fit_filter_polynomial(const Eigen::MatrixXd& h, const ShiftMatrix& s,
                                double tol = kDefaultTolRel);

// For a symmetric S with a repeated eigenvalue: returns the symmetric filter
// H = u*v^T + v*u^T built from two orthonormal eigenvectors of that
// eigenvalue. H commutes with S but is not a polynomial in S (a polynomial
// acts as one scalar on the eigenspace, H swaps u and v instead). Raises
// IsShiftEnabledError when the spectrum is distinct.
Eigen::MatrixXd commuting_witness(const ShiftMatrix& s);

}  // namespace shiftlab
