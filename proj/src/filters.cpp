#include "shiftlab/filters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

double inf_norm(const Eigen::MatrixXd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

bool commutes(const Eigen::MatrixXd& h, const ShiftMatrix& s, double tol) {
    if (h.rows() != h.cols() || h.rows() != s.dim())
        throw std::invalid_argument("commutes: filter dimensions do not match the shift matrix");
    const Eigen::MatrixXd& m = s.entries;
    return inf_norm(h * m - m * h) <= tol * (1.0 + inf_norm(h) * inf_norm(m));
}

FilterFit fit_filter_polynomial(const Eigen::MatrixXd& h, const ShiftMatrix& s, double tol) {
    if (!s.symmetric)
        throw NonSymmetricKindError(
            "fit_filter_polynomial needs a symmetric shift matrix; symmetrize first");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!commutes(h, s, tol))
        throw DoesNotCommuteError("filter does not commute with the shift matrix");

    const int n = s.dim();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.entries);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    const Eigen::VectorXd& lambda = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd b = solver.eigenvectors().transpose() * h * solver.eigenvectors();

    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(lambda(i)));

    // Group numerically equal eigenvalues; each group is one interpolation node.
    std::vector<int> start{0};
    for (int i = 1; i < n; ++i)
        if (lambda(i) - lambda(i - 1) > tol * scale) start.push_back(i);
    start.push_back(n);
    const int clusters = static_cast<int>(start.size()) - 1;

    FilterFit fit;
    fit.coefficients = Eigen::VectorXd::Zero(n);

    // A polynomial of S is diagonal in the eigenbasis and constant on every
    // repeated eigenspace; check H has that shape and collect node values.
    const double block_tol = tol * (1.0 + inf_norm(h));
    std::vector<double> node(clusters), value(clusters);
    for (int c = 0; c < clusters; ++c) {
        const int lo = start[c], hi = start[c + 1];
        double mu = 0.0;
        for (int i = lo; i < hi; ++i) mu += b(i, i);
        mu /= hi - lo;
        if (hi - lo > 1) {
            double worst = 0.0;
            for (int i = lo; i < hi; ++i)
                for (int j = lo; j < hi; ++j)
                    worst = std::max(worst, std::abs(b(i, j) - (i == j ? mu : 0.0)));
            if (worst > block_tol) {
                fit.representable = false;
                fit.violating_eigenspace = c;
                fit.residual = std::numeric_limits<double>::quiet_NaN();
                return fit;
            }
        }
        double mean_lambda = 0.0;
        for (int i = lo; i < hi; ++i) mean_lambda += lambda(i);
        node[c] = mean_lambda / (hi - lo);
        value[c] = mu;
    }

    // Newton interpolation through the cluster nodes, Leja-ordered for
    // conditioning: start at the largest |node|, then repeatedly take the node
    // maximizing the product of distances to those already placed (products
    // compared as log sums to dodge overflow).
    std::vector<int> order(clusters);
    std::iota(order.begin(), order.end(), 0);
    for (int c = 1; c < clusters; ++c)
        if (std::abs(node[order[c]]) > std::abs(node[order[0]])) std::swap(order[0], order[c]);
    for (int k = 1; k + 1 < clusters; ++k) {
        int best = k;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int c = k; c < clusters; ++c) {
            double score = 0.0;
            for (int j = 0; j < k; ++j)
                score += std::log(std::abs(node[order[c]] - node[order[j]]));
            if (score > best_score) {
                best_score = score;
                best = c;
            }
        }
        std::swap(order[k], order[best]);
    }

    std::vector<double> x(clusters), vals(clusters);
    for (int k = 0; k < clusters; ++k) {
        x[k] = node[order[k]];
        vals[k] = value[order[k]];
    }

    const auto newton_to_monomial = [&](const std::vector<double>& rhs) {
        // Divided differences in place: d[k] ends up as f[x_0..x_k].
        std::vector<double> d = rhs;
        for (int level = 1; level < clusters; ++level)
            for (int k = clusters - 1; k >= level; --k)
                d[k] = (d[k] - d[k - 1]) / (x[k] - x[k - level]);
        // Expand the Newton form into monomial coefficients (ascending powers).
        Eigen::VectorXd coeff = Eigen::VectorXd::Zero(n);
        std::vector<double> basis(clusters, 0.0);
        basis[0] = 1.0;
        int basis_deg = 0;
        for (int k = 0; k < clusters; ++k) {
            for (int i = 0; i <= basis_deg; ++i) coeff(i) += d[k] * basis[i];
            if (k + 1 < clusters) {
                // basis *= (t - x[k]); descending index keeps the update in place.
                for (int i = basis_deg + 1; i >= 1; --i) basis[i] = basis[i - 1] - x[k] * basis[i];
                basis[0] *= -x[k];
                ++basis_deg;
            }
        }
        return coeff;
    };

    fit.coefficients = newton_to_monomial(vals);
    // One refinement pass against the node values; the monomial expansion
    // sheds digits at higher degrees and this claws most of them back.
    std::vector<double> res(clusters);
    for (int k = 0; k < clusters; ++k) {
        double p = 0.0;
        for (int i = n - 1; i >= 0; --i) p = p * x[k] + fit.coefficients(i);
        res[k] = vals[k] - p;
    }
    fit.coefficients += newton_to_monomial(res);

    // Residual of the reconstruction, by matrix Horner evaluation.
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * s.entries;
        acc.diagonal().array() += fit.coefficients(k);
    }
    fit.representable = true;
    fit.residual = inf_norm(h - acc);
    return fit;
}

Eigen::MatrixXd commuting_witness(const ShiftMatrix& s) {
    if (!s.symmetric)
        throw NonSymmetricKindError("commuting_witness needs a symmetric shift matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.entries);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const int n = s.dim();

    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(lambda(i)));
    int pair = -1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) {
        if (lambda(i + 1) - lambda(i) < best_gap) {
            best_gap = lambda(i + 1) - lambda(i);
            pair = i;
        }
    }
    if (pair < 0 || best_gap > kDefaultTolRel * scale)
        throw IsShiftEnabledError(
            "no repeated eigenvalue: the shift matrix is shift-enabled, so every "
            "commuting filter is already a polynomial in it");

    Eigen::VectorXd u = solver.eigenvectors().col(pair);
    Eigen::VectorXd v = solver.eigenvectors().col(pair + 1);
    v -= u.dot(v) * u;  // re-orthonormalize within the eigenspace span
    v.normalize();
    return u * v.transpose() + v * u.transpose();
}

}  // namespace shiftlab
