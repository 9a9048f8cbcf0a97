#pragma once

#include <limits>
#include <string_view>

#include <Eigen/Dense>

#include "shiftlab/graph.hpp"
#include "shiftlab/shift_matrix.hpp"

namespace shiftlab {

// Relative eigenvalue-gap tolerance for the floating-point verdict. Sits well
// above symmetric-eigensolver backward error and well below genuine gaps of
// the graphs studied here; the exact integer oracle pins the window in tests.
inline constexpr double kDefaultTolRel = 1e-8;

// Sorted eigenvalues plus the gap metadata the shift-enabled decision reads.
struct Spectrum {
    Eigen::VectorXd values;  // ascending
    double min_gap = std::numeric_limits<double>::infinity();
    int min_gap_index = -1;  // lower index of the closest consecutive pair
    double scale = 1.0;      // max(1, largest |eigenvalue|)

    int size() const { return static_cast<int>(values.size()); }
};

// Sorts raw eigenvalues and fills in min_gap / scale.
Spectrum make_spectrum(Eigen::VectorXd values);

// Full spectrum of a symmetric shift matrix. Raw transition matrices must go
// through symmetrize_transition first; passing one raises NonSymmetricKindError.
Spectrum eigenvalues_symmetric(const ShiftMatrix& s);

enum class VerdictReason {
    Disconnected,        // Laplacian-like kind on a disconnected graph
    RepeatedEigenvalue,  // smallest gap at or below tolerance
    DistinctSpectrum,    // smallest gap above tolerance
    ExactSquareFree,     // exact integer route, either outcome
};

std::string_view to_string(VerdictReason reason);

struct ShiftEnabledVerdict {
    bool enabled = false;
    VerdictReason reason = VerdictReason::RepeatedEigenvalue;
    double tolerance_used = kDefaultTolRel;
    // Diagnostics, populated when an eigensolve actually ran.
    double gap = 0.0;
    int pair_index = -1;
    double repeated_value = std::numeric_limits<double>::quiet_NaN();
};

// Floating-point decision: enabled iff min_gap > tol_rel * scale. Disconnected
// graphs short-circuit to "no" for the kinds whose spectra must repeat across
// components (Laplacian and normalized Laplacian collect one 0 per component,
// transition one 1); adjacency-like kinds always eigensolve.
ShiftEnabledVerdict is_shift_enabled(const Graph& g, ShiftKind kind,
                                     double tol_rel = kDefaultTolRel);

// Same decision applied to an already-computed spectrum.
ShiftEnabledVerdict verdict_from_spectrum(const Spectrum& spec, double tol_rel);

// Closed-form Laplacian spectrum of the regular ring lattice where each vertex
// connects to its k_half nearest neighbors per side:
//   2*k_half - 2*[cos(2*pi*j/n) + ... + cos(2*pi*k_half*j/n)],  j = 0..n-1.
Spectrum ring_lattice_spectrum(int n, int k_half);

// Predicted Laplacian spectrum of the complement graph: drop the zero
// eigenvalue, map every other eigenvalue through lambda -> n - lambda, put the
// zero back, sort. Raises NotLaplacianSpectrumError when the input has no
// eigenvalue within 1e-8 * scale of zero.
Spectrum complement_spectrum(const Spectrum& spec, int n);

}  // namespace shiftlab
