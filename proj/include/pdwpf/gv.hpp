#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pdwpf/jet2.hpp"
#include "pdwpf/rat.hpp"

namespace pdwpf {

// Cyclic degree-2 function y1 y2 + y2 y3 + ... + yN y1 (wraparound, so N=1
// gives y^2 and N=2 gives 2 y1 y2).
Rat m2_cyclic(const std::vector<Rat>& ys);

// Residual of sum_i (y_i - y_{i+1})^2 - (4 h2 - 2 h1^2 - 2 m2); exactly
// zero for every y vector.
Rat derivative_identity_check(const std::vector<Rat>& ys);

// Reads the two quadratic actions off a degree-2 jet at 0.
std::pair<Rat, Rat> h2_g2_of_jet(const Jet2& f);

// f(0) + (g^2/2) * sum_i (d_i - d_{i+1})^2 f at 0, assembled from one jet
// evaluation of f; the O(g^4) tail is dropped by construction.
Rat gv_map_direct(const std::function<Jet2(const std::vector<Jet2>&)>& f, int N,
                  const Rat& g2);

// Closed-form action pair on the h-monomial prod_k h_k^(exponents[k-1]);
// (0, 0) whenever the total degree sum_k k*exponents[k-1] differs from 2.
std::pair<Rat, Rat> h2_g2_action(const std::vector<int>& exponents, int N);

// One-loop determinant: the c-coefficient table with columns N-1 and N
// shifted by g^2 N times columns N+1 and N+2, signed and divided by the x
// Vandermonde; expanded in g^2 with the g^4 term dropped.
Rat gv_pdwpf_det(const std::vector<Rat>& xs, int N, const Rat& g2);

// The mapping applied to the n-row partial function as a polynomial in the
// y's, through its Casoratian form (no y denominators, so jets flow
// through).  gv_pdwpf_det must reproduce this exactly modulo g^4.
Rat gv_zeta1_direct(const std::vector<Rat>& xs, int N, const Rat& g2);

} // namespace pdwpf
