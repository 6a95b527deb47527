#pragma once

#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/rat.hpp"

namespace pdwpf {

// Polynomial-weight partial DWPF in its two determinant realizations.
// ZETA1 is the N x N Cauchy/monomial hybrid times the clearing factor
// prod (x_i - y_j)(x_i - y_j + 1); ZETA2 is the n x n power-row form.
// Both equal the summed-top lattice value with polynomial weights.
enum class ZetaVariant { ZETA1, ZETA2 };

// ZETA1 needs pairwise distinct xs and ys and no x_i - y_j in {0, -1};
// ZETA2 only needs distinct xs.
Rat zeta(ZetaVariant variant, const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct DegreeReport {
    bool pass = false;  // degree <= 2N-1
    int degree = -2;    // observed exact degree (-1 for the zero polynomial)
    int coarse_bound = 0;
    int sharp_bound = 0; // variant-specific observed bound, recorded not asserted
};

// Samples zeta in the last x variable at 2N+2 pole-free abscissae and
// interpolates the exact degree.  xs_head carries the n-1 fixed values.
DegreeReport check_property_A(ZetaVariant variant, const std::vector<Rat>& xs_head,
                              const std::vector<Rat>& ys);

// zeta is symmetric under permuting ys; perm is a permutation of 0..N-1.
bool check_property_B(ZetaVariant variant, const std::vector<Rat>& xs,
                      const std::vector<Rat>& ys, const std::vector<int>& perm);

// Both two-term recursions: substituting x_n = y_N (resp. y_N - 1) factors
// zeta into an explicit product times the (n-1, N-1) value.  Needs n >= 2;
// xs supplies x_1..x_n, of which the last entry is replaced by the
// substitution point.  For ZETA1 the substitution sits on a pole of the
// determinant route, so the value is reached by exact interpolation.
bool check_property_C(ZetaVariant variant, const std::vector<Rat>& xs,
                      const std::vector<Rat>& ys);

// n = 1 closed form: the l-sum with split products equals the telescoped
// difference prod (x-y+1) - prod (x-y), and both equal zeta, checked at
// 2N+1 sample points of x_1.
bool check_property_D(const std::vector<Rat>& ys);

} // namespace pdwpf
