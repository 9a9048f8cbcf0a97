#include "shiftlab/exact.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

// Dense big-integer matrix, row-major.
struct ZMatrix {
    int n = 0;
    std::vector<mpz_class> a;

    explicit ZMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

ZMatrix to_integer_matrix(const ShiftMatrix& s) {
    const int n = s.dim();
    ZMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = s.entries(i, j);
            if (!std::isfinite(x) || x != std::nearbyint(x))
                throw NonIntegerEntriesError(
                    "exact route needs integer entries; " + std::string(to_string(s.kind)) +
                    " entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                    std::to_string(x));
            m.at(i, j) = mpz_class(x);  // exact: x is integral
        }
    }
    return m;
}

void multiply(const ZMatrix& a, const ZMatrix& b, ZMatrix& out) {
    const int n = a.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mpz_class& sum = out.at(i, j);
            sum = 0;
            for (int k = 0; k < n; ++k) sum += a.at(i, k) * b.at(k, j);
        }
    }
}

// Integer polynomial, degree-descending; the empty vector is the zero poly.
using Poly = std::vector<mpz_class>;

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void strip_leading_zeros(Poly& p) {
    std::size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

// Pseudo-remainder: the r in lc(v)^(deg u - deg v + 1) * u = q*v + r, built by
// the division-free recurrence r <- lc(v)*r - lc(r)*x^k*v.
Poly pseudo_remainder(const Poly& u, const Poly& v) {
    const int dv = deg(v);
    const mpz_class& lv = v[0];
    Poly r = u;
    for (int step = deg(u) - dv; step >= 0; --step) {
        if (deg(r) == dv + step) {
            const mpz_class lr = r[0];
            for (auto& c : r) c *= lv;
            for (int i = 0; i <= dv; ++i) r[static_cast<std::size_t>(i)] -= lr * v[static_cast<std::size_t>(i)];
            strip_leading_zeros(r);
        } else {
            for (auto& c : r) c *= lv;
        }
        if (r.empty()) break;
    }
    return r;
}

}  // namespace

IntPolynomial char_poly_exact(const ShiftMatrix& s) {
    const int n = s.dim();
    IntPolynomial p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
    p.coeffs[0] = 1;
    if (n == 0) return p;

    const ZMatrix a = to_integer_matrix(s);
    // Faddeev-LeVerrier: N_1 = A; c_k = -tr(N_k)/k; N_{k+1} = A*(N_k + c_k*I).
    // Each trace is divisible by k, so truncated division is exact.
    ZMatrix nk = a;
    ZMatrix scratch(n);
    for (int k = 1; k <= n; ++k) {
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i) trace += nk.at(i, i);
        mpz_class ck = -trace / k;
        p.coeffs[static_cast<std::size_t>(k)] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) nk.at(i, i) += ck;
        multiply(a, nk, scratch);
        std::swap(nk.a, scratch.a);
    }
    return p;
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.coeffs.empty() || p.coeffs[0] != 1)
        throw std::invalid_argument("is_squarefree expects a monic polynomial");
    const int n = p.degree();
    if (n <= 1) return true;

    Poly u = p.coeffs;
    Poly v(static_cast<std::size_t>(n));  // derivative, degree n-1, leading coeff n
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = p.coeffs[static_cast<std::size_t>(i)] * (n - i);

    // Subresultant remainder sequence (Knuth 4.6.1, Algorithm C). We only need
    // whether gcd(u, v) has positive degree, i.e. whether the sequence dies
    // before reaching a constant.
    mpz_class g = 1, h = 1;
    for (;;) {
        const int delta = deg(u) - deg(v);
        Poly r = pseudo_remainder(u, v);
        if (r.empty()) return false;  // gcd ~ v, positive degree: repeated root
        if (deg(r) == 0) return true;  // gcd constant: square-free

        mpz_class divisor;
        mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor *= g;
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());

        u = std::move(v);
        v = std::move(r);
        g = u[0];
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {  // h <- g^delta / h^(delta-1), exact
            mpz_class gd, hd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
}

ShiftEnabledVerdict is_shift_enabled_exact(const Graph& g, ShiftKind kind) {
    if (g.vertex_count() > kMaxExactDimension)
        throw DimensionTooLargeError("exact verdict supports n <= " +
                                     std::to_string(kMaxExactDimension) + ", got n = " +
                                     std::to_string(g.vertex_count()));
    ShiftEnabledVerdict v;
    v.enabled = is_squarefree(char_poly_exact(build_shift(g, kind)));
    v.reason = VerdictReason::ExactSquareFree;
    v.tolerance_used = 0.0;
    return v;
}

}  // namespace shiftlab
