#include "shiftlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

std::string_view to_string(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::Disconnected: return "disconnected";
        case VerdictReason::RepeatedEigenvalue: return "repeated-eigenvalue";
        case VerdictReason::DistinctSpectrum: return "distinct-spectrum";
        case VerdictReason::ExactSquareFree: return "exact-square-free";
    }
    return "?";
}

Spectrum make_spectrum(Eigen::VectorXd values) {
    std::sort(values.data(), values.data() + values.size());
    Spectrum spec;
    spec.values = std::move(values);
    for (int i = 0; i < spec.size(); ++i)
        spec.scale = std::max(spec.scale, std::abs(spec.values(i)));
    for (int i = 0; i + 1 < spec.size(); ++i) {
        const double gap = spec.values(i + 1) - spec.values(i);
        if (gap < spec.min_gap) {
            spec.min_gap = gap;
            spec.min_gap_index = i;
        }
    }
    return spec;
}

Spectrum eigenvalues_symmetric(const ShiftMatrix& s) {
    if (!s.symmetric)
        throw NonSymmetricKindError(
            "eigenvalues_symmetric needs a symmetric matrix; "
            "run the transition matrix through symmetrize_transition first");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.entries, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("symmetric eigensolver did not converge");
    return make_spectrum(solver.eigenvalues());
}

ShiftEnabledVerdict verdict_from_spectrum(const Spectrum& spec, double tol_rel) {
    if (!(tol_rel > 0.0)) throw std::invalid_argument("tol_rel must be positive");
    ShiftEnabledVerdict v;
    v.tolerance_used = tol_rel;
    v.gap = spec.min_gap;
    v.pair_index = spec.min_gap_index;
    if (spec.min_gap > tol_rel * spec.scale) {
        v.enabled = true;
        v.reason = VerdictReason::DistinctSpectrum;
    } else {
        v.enabled = false;
        v.reason = VerdictReason::RepeatedEigenvalue;
        v.repeated_value =
            0.5 * (spec.values(v.pair_index) + spec.values(v.pair_index + 1));
    }
    return v;
}

namespace {

// Kinds whose spectrum necessarily repeats on a disconnected graph. The
// adjacency-like kinds carry no such guarantee (two different components can
// have disjoint adjacency spectra), so they get no shortcut.
bool disconnection_forces_repeat(ShiftKind kind) {
    return kind == ShiftKind::Laplacian || kind == ShiftKind::NormalizedLaplacian ||
           kind == ShiftKind::Transition;
}

}  // namespace

ShiftEnabledVerdict is_shift_enabled(const Graph& g, ShiftKind kind, double tol_rel) {
    if (!(tol_rel > 0.0)) throw std::invalid_argument("tol_rel must be positive");
    // Build first so precondition violations (signed input, isolated vertex)
    // surface as errors even for graphs the shortcut below would catch.
    ShiftMatrix s = build_shift(g, kind);
    if (disconnection_forces_repeat(kind) && !is_connected(g)) {
        ShiftEnabledVerdict v;
        v.enabled = false;
        v.reason = VerdictReason::Disconnected;
        v.tolerance_used = tol_rel;
        return v;
    }
    if (kind == ShiftKind::Transition) s = symmetrize_transition(s);
    return verdict_from_spectrum(eigenvalues_symmetric(s), tol_rel);
}

Spectrum ring_lattice_spectrum(int n, int k_half) {
    if (n < 3) throw std::invalid_argument("ring_lattice_spectrum: n must be >= 3");
    if (k_half < 1 || 2 * k_half > n - 1)
        throw std::invalid_argument("ring_lattice_spectrum: k_half must lie in [1, (n-1)/2]");
    Eigen::VectorXd values(n);
    for (int j = 0; j < n; ++j) {
        double adjacency = 0.0;  // circulant adjacency eigenvalue
        for (int t = 1; t <= k_half; ++t)
            adjacency += 2.0 * std::cos(2.0 * M_PI * t * j / n);
        values(j) = 2.0 * k_half - adjacency;  // Laplacian: degree minus adjacency
    }
    return make_spectrum(std::move(values));
}

Spectrum complement_spectrum(const Spectrum& spec, int n) {
    if (spec.size() != n)
        throw std::invalid_argument("complement_spectrum: spectrum size must equal n");
    int zero_index = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(spec.values(i)) < std::abs(spec.values(zero_index))) zero_index = i;
    if (std::abs(spec.values(zero_index)) > 1e-8 * spec.scale)
        throw NotLaplacianSpectrumError(
            "complement_spectrum: input has no zero eigenvalue, so it is not a "
            "Laplacian spectrum");
    Eigen::VectorXd values(n);
    int out = 0;
    values(out++) = 0.0;
    for (int i = 0; i < n; ++i)
        if (i != zero_index) values(out++) = n - spec.values(i);
    return make_spectrum(std::move(values));
}

}  // namespace shiftlab
