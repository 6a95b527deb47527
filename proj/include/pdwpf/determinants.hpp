#pragma once

#include <vector>

#include "pdwpf/det.hpp"
#include "pdwpf/errors.hpp"
#include "pdwpf/matrix.hpp"
#include "pdwpf/poly.hpp"
#include "pdwpf/rat.hpp"
#include "pdwpf/ring.hpp"
#include "pdwpf/weights.hpp"

namespace pdwpf {

// Formula bodies, templated over an exact ring so the same code runs on
// plain rationals and on Laurent jets (for the infinite-rapidity limits).
// No input validation here: the public Rat wrappers below reject degenerate
// input up front, and the ring's own division guards catch the rest.
namespace cores {

template <class R>
R sh(const R& U, const R& proto) {
    return (U - ring_ops<R>::inv(U)) * ring_ops<R>::from_rat(proto, Rat(1, 2));
}

// [a-b] with A = e^a, B = e^b.
template <class R>
R sh_d(const R& A, const R& B, const R& proto) {
    return sh(A * ring_ops<R>::inv(B), proto);
}

template <class R>
R izergin_rational(const std::vector<R>& xs, const std::vector<R>& ys, const R& proto) {
    const int N = static_cast<int>(xs.size());
    R pref = ring_ops<R>::one(proto);
    for (const R& x : xs)
        for (const R& y : ys) pref *= x - y;
    const R dv = vandermonde_t(xs, +1, proto) * vandermonde_t(ys, -1, proto);
    SquareMatrix<R> M(N, ring_ops<R>::zero(proto));
    const R one = ring_ops<R>::one(proto);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const R d = xs[static_cast<size_t>(i)] - ys[static_cast<size_t>(j)];
            M(i, j) = ring_ops<R>::inv(d * (d + one));
        }
    return pref * ring_ops<R>::inv(dv) * det_in_ring(M, proto);
}

template <class R>
R izergin_trig(const std::vector<R>& Xs, const std::vector<R>& Ys, const R& G, const R& proto) {
    const int N = static_cast<int>(Xs.size());
    R pref = ring_ops<R>::one(proto);
    for (const R& X : Xs) pref *= X;
    for (const R& Y : Ys) pref *= ring_ops<R>::inv(Y);
    for (const R& X : Xs)
        for (const R& Y : Ys) pref *= sh_d(X, Y, proto);
    R dv = ring_ops<R>::one(proto);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            dv *= sh_d(Xs[static_cast<size_t>(j)], Xs[static_cast<size_t>(i)], proto);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            dv *= sh_d(Ys[static_cast<size_t>(i)], Ys[static_cast<size_t>(j)], proto);
    const R shg = sh(G, proto);
    SquareMatrix<R> M(N, ring_ops<R>::zero(proto));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const R& X = Xs[static_cast<size_t>(i)];
            const R& Y = Ys[static_cast<size_t>(j)];
            M(i, j) = shg * ring_ops<R>::inv(sh_d(X, Y, proto) * sh_d(X * G, Y, proto));
        }
    return pref * ring_ops<R>::inv(dv) * det_in_ring(M, proto);
}

// Slavnov determinant, rational parametrization.  Assumes the bs obey the
// Bethe equations; the wrapper enforces that.
template <class R>
R slavnov_rational(const std::vector<R>& xs, const std::vector<R>& bs, const std::vector<R>& ys,
                   const R& proto) {
    const int n = static_cast<int>(xs.size());
    const R one = ring_ops<R>::one(proto);
    SquareMatrix<R> M(n, ring_ops<R>::zero(proto));
    for (int i = 0; i < n; ++i) {
        const R& x = xs[static_cast<size_t>(i)];
        R common = ring_ops<R>::one(proto);
        for (const R& y : ys) common *= (x - y) * ring_ops<R>::inv(x - y + one);
        for (int j = 0; j < n; ++j) {
            R t1 = common, t2 = one;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                t1 *= bs[static_cast<size_t>(k)] - x - one;
                t2 *= bs[static_cast<size_t>(k)] - x + one;
            }
            M(i, j) = (t1 - t2) * ring_ops<R>::inv(x - bs[static_cast<size_t>(j)]);
        }
    }
    const R dv = vandermonde_t(xs, +1, proto) * vandermonde_t(bs, -1, proto);
    return det_in_ring(M, proto) * ring_ops<R>::inv(dv);
}

} // namespace cores

// Domain-wall partition function, Izergin determinant.  scheme selects the
// rational or the trigonometric (multiplicative-coordinate) form.
Rat izergin_dwpf(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                 const WeightScheme& scheme);

// Partial domain-wall partition function as an N x N hybrid determinant:
// n Izergin-type rows plus N-n rows of monomials y_j^(N-n-1) ... y_j^0.
// With h_row_variant the lower rows are instead the two-variable complete
// symmetric functions h_r(y_j, y_j - 1) and the determinant is divided by
// (N-n)!; both forms agree exactly.
Rat pdwpf_hybrid(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                 bool h_row_variant = false);

// Same quantity as an n x n determinant (Kostov's form):
// Delta^-1{x} det( x_i^(j-1) - (x_i+1)^(j-1) prod_k (x_i-y_k)/(x_i-y_k+1) ).
Rat pdwpf_kostov(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Same quantity as a sum over splittings {1..n} = {alpha} u {beta}.
Rat pdwpf_partition_sum(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Trigonometric partial DWPF with the top boundary summed, multiplicative
// coordinates.  Not equal to pdwpf_trig_kostov: the two trig quantities
// differ, each matches its own lattice.
Rat pdwpf_trig_hybrid(const std::vector<Rat>& exs, const std::vector<Rat>& eys, const Rat& eg);

// Trigonometric partial DWPF with reversed horizontal/bottom arrows.
Rat pdwpf_trig_kostov(const std::vector<Rat>& exs, const std::vector<Rat>& eys, const Rat& eg);

// Exact Bethe-equation residuals (lhs - rhs per root).  RATIONAL or
// TRIGONOMETRIC (multiplicative bs/ys) scheme.
std::vector<Rat> bethe_check(const std::vector<Rat>& bs, const std::vector<Rat>& ys,
                             const WeightScheme& scheme);

// Slavnov scalar product, exact rational form.  The bs must satisfy the
// Bethe equations exactly (NotBetheRoots otherwise).
Rat slavnov_scalar_product(const std::vector<Rat>& xs, const std::vector<Rat>& bs,
                           const std::vector<Rat>& ys);

// Trigonometric Slavnov scalar product in multiplicative coordinates; the
// ebs must satisfy the trigonometric Bethe equations exactly.
Rat slavnov_scalar_product_trig(const std::vector<Rat>& exs, const std::vector<Rat>& ebs,
                                const std::vector<Rat>& eys, const Rat& eg);

} // namespace pdwpf
