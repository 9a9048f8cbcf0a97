#pragma once

#include <vector>

#include <gmpxx.h>

#include "shiftlab/graph.hpp"
#include "shiftlab/shift_matrix.hpp"
#include "shiftlab/spectral.hpp"

namespace shiftlab {

// Hard cap for the exact route; beyond this the O(n^4) big-integer cost and
// coefficient growth stop being worth it.
inline constexpr int kMaxExactDimension = 64;

// Monic polynomial with arbitrary-precision integer coefficients, stored
// degree-descending (coeffs[0] is the leading 1).
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// Exact characteristic polynomial det(lambda*I - S) via the Faddeev-LeVerrier
// recurrence; every division it performs is exact over the integers. Raises
// NonIntegerEntriesError unless all entries of s are integers.
IntPolynomial char_poly_exact(const ShiftMatrix& s);

// True iff p has no repeated roots, i.e. gcd(p, p') is constant. Decided with
// a fraction-free subresultant polynomial remainder sequence, so the answer is
// exact for any coefficient size.
bool is_squarefree(const IntPolynomial& p);

// Exact shift-enabled verdict: for a symmetric integer matrix, the minimal
// polynomial equals the characteristic polynomial iff the latter is
// square-free. Raises DimensionTooLargeError above kMaxExactDimension.
ShiftEnabledVerdict is_shift_enabled_exact(const Graph& g, ShiftKind kind);

}  // namespace shiftlab
