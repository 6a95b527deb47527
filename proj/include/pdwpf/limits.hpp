#pragma once

#include <vector>

#include "pdwpf/laurent.hpp"
#include "pdwpf/rat.hpp"

namespace pdwpf {

// Outcome of one infinite-rapidity check: the coefficient pulled out of the
// Laurent evaluation (already normalized) against the directly computed
// lower-rank determinant.
struct LimitReport {
    Rat extracted{0};
    Rat expected{0};
    bool pass = false;
};

// x_N = 1/eps in the N x N domain-wall determinant; the eps^1 coefficient
// equals the partial function with rows xs_head.  Needs |xs_head| = N - 1.
LimitReport limit_check_one(const std::vector<Rat>& xs_head, const std::vector<Rat>& ys,
                            int window = LaurentRat::default_window);

// Two rows sent off in sequence (x_N outer, x_{N-1} inner); the double
// coefficient eps^1 delta^1 divided by 2! equals the rank-(N-2) partial
// function.  Needs |xs_head| = N - 2 >= 1.
LimitReport limit_check_many(const std::vector<Rat>& xs_head, const std::vector<Rat>& ys,
                             int window = LaurentRat::default_window);

// Trigonometric single-step chain in multiplicative coordinates: the finite
// X_N -> infinity limit (eps^0 coefficient) divided by (1 - q), q = 1/G^2,
// equals the partial function with rows exs_head.  Needs |exs_head| = N - 1.
LimitReport limit_check_trig(const std::vector<Rat>& exs_head, const std::vector<Rat>& eys,
                             const Rat& eg, int window = LaurentRat::default_window);

// All n root rapidities of the scalar product sent off; the extracted
// coefficient equals n! times the n x n partial-function determinant.
// Supports n_roots in {1, 2}.
LimitReport limit_check_slavnov(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                int n_roots, int window = LaurentRat::default_window);

} // namespace pdwpf
