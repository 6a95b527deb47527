#pragma once

#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/rat.hpp"
#include "pdwpf/ring.hpp"

namespace pdwpf {

// Complete homogeneous symmetric function h_i of a multiset of variables,
// by the stable recurrence off the generating product 1/prod(1 - x k):
// absorbing one variable at a time updates h_k += x h_{k-1}.  h_i = 0 for
// i < 0, h_0 = 1.  Templated so jets can flow through.
template <class R>
R complete_h_t(int i, const std::vector<R>& vars, const R& proto) {
    if (i < 0) return ring_ops<R>::zero(proto);
    std::vector<R> h(static_cast<size_t>(i) + 1, ring_ops<R>::zero(proto));
    h[0] = ring_ops<R>::one(proto);
    for (const R& x : vars)
        for (int k = 1; k <= i; ++k) h[static_cast<size_t>(k)] += x * h[static_cast<size_t>(k) - 1];
    return h[static_cast<size_t>(i)];
}

inline Rat complete_h(int i, const std::vector<Rat>& vars) {
    return complete_h_t<Rat>(i, vars, Rat(0));
}

// Elementary symmetric function e_k; 0 for k < 0 or k > |vars|.
Rat elementary_e(int k, const std::vector<Rat>& vars);

// (h_i{x} - h_i{x with entry m removed}) / x_m.  Equals h_{i-1}{x}; the
// equality is asserted on every call.
Rat discrete_derivative(int i, const std::vector<Rat>& vars, int m);

// Row coefficients c_{ik}{x} of the N x N Casoratian form (1-based i, k):
// for i <= n, e_{2n-k-1} of {-x, -x-1} with the i-th pair removed; for
// i > n, e_{2n-k+N-i+1} of the full {-x, -x-1}.
Rat coeff_c(int i, int k, const std::vector<Rat>& xs, int n, int N);

// Column coefficients d_{kj}{y} of the n x n form (1-based k, j):
// sum_l [C(N-l, k-j) - C(j-1, k-N+l-1)] e_l{-y}.
Rat coeff_d(int k, int j, const std::vector<Rat>& ys, int N);

enum class TauSource { TAU_IK, TAU_S };

// A tau function given by a Casoratian determinant.  The Miwa variables
// (with per-variable multiplicities) feed the h factors; the fixed
// parameter set feeds the c or d coefficient table.
struct TauSpec {
    TauSource source = TauSource::TAU_IK;
    std::vector<Rat> params; // xs for TAU_IK, ys for TAU_S
    std::vector<Rat> miwa;   // base Miwa variable values (ys resp. xs)
    int n = 0;
    int N = 0;
};

TauSpec make_tau_ik(const std::vector<Rat>& xs, const std::vector<Rat>& ys);
TauSpec make_tau_s(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

using MultiplicityVector = std::vector<int>;

// Matrix dimension of the Casoratian (N for TAU_IK, n for TAU_S).
int tau_dim(const TauSpec& spec);

// One matrix element omega_{ij} (0-based) at the given multiplicities.
Rat tau_entry(const TauSpec& spec, const MultiplicityVector& mult, int i, int j);

// The bare Casoratian determinant.  No Vandermonde prefactor: constants in
// the Miwa variables drop out of every bilinear identity anyway.
Rat tau_value(const TauSpec& spec, const MultiplicityVector& mult);

// Verifies omega_{i,j+1} = Delta_m omega_{ij} for every entry in range
// (the shift runs along columns for TAU_IK, rows for TAU_S), plus the
// two-doubled-variable identity relating omega at raised multiplicities.
bool casorati_check(const TauSpec& spec, const MultiplicityVector& mult, int m);

// Residual of the three-term bilinear difference equation on Miwa
// variables i, j, k; exactly zero for a genuine tau.
Rat hirota_miwa_check(const TauSpec& spec, const MultiplicityVector& mult, int i, int j, int k);

// Determinant form of the bilinear hierarchy on a subset of >= 3 Miwa
// variables: rows [1, x_i, ..., x_i^(s-2), x_i^(s-2) tau_{+i} tau_{-i}]
// where tau_{-i} raises every *subset* variable except i.  Zero for a
// genuine tau.
Rat kp_bilinear_check(const TauSpec& spec, const MultiplicityVector& mult,
                      const std::vector<int>& subset);

} // namespace pdwpf
