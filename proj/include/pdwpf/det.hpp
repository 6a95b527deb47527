#pragma once

#include <utility>
#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/matrix.hpp"
#include "pdwpf/rat.hpp"
#include "pdwpf/ring.hpp"

namespace pdwpf {

namespace detail {

// Cofactor expansion along the first row; fine for small orders, and the
// only route that never divides.
template <class R>
R det_cofactor(const std::vector<R>& a, int n, const R& proto) {
    if (n == 0) return ring_ops<R>::one(proto);
    if (n == 1) return a[0];
    R acc = ring_ops<R>::zero(proto);
    std::vector<R> minor;
    minor.reserve(static_cast<size_t>(n - 1) * (n - 1));
    for (int j = 0; j < n; ++j) {
        if (ring_ops<R>::exact_zero(a[static_cast<size_t>(j)])) continue;
        minor.clear();
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != j) minor.push_back(a[static_cast<size_t>(r) * n + c]);
        R term = a[static_cast<size_t>(j)] * det_cofactor(minor, n - 1, proto);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace detail

// Exact determinant over the rationals, Bareiss-style fraction-free
// elimination with row pivoting.  Order zero gives 1 by the empty-product
// convention.
inline Rat det_exact(const SquareMatrix<Rat>& m) {
    const int n = m.order();
    if (n == 0) return Rat(1);
    std::vector<Rat> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    auto at = [&](int i, int j) -> Rat& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    Rat prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (!at(r, k).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return Rat(0);
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    Rat d = at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

// Determinant over a general exact ring.  Eliminates with unit pivots
// (searching the whole remaining block, tracking the permutation sign); if
// no unit pivot exists the remaining minor is finished by cofactor
// expansion when its order is at most 8, otherwise NoUnitPivot.
template <class R>
R det_in_ring(const SquareMatrix<R>& m, const R& proto) {
    const int n = m.order();
    if (n == 0) return ring_ops<R>::one(proto);
    std::vector<R> a;
    a.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.push_back(m(i, j));
    auto at = [&](int i, int j) -> R& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    R acc = ring_ops<R>::one(proto);
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (ring_ops<R>::unit(at(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) {
            const int rem = n - k;
            if (rem > 8)
                throw NoUnitPivot("det_in_ring: no unit pivot in remaining minor of order " +
                                  std::to_string(rem));
            std::vector<R> minor;
            minor.reserve(static_cast<size_t>(rem) * rem);
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) minor.push_back(at(i, j));
            R d = acc * detail::det_cofactor(minor, rem, proto);
            return sign > 0 ? d : -d;
        }
        if (pi != k) {
            for (int c = 0; c < n; ++c) std::swap(at(pi, c), at(k, c));
            sign = -sign;
        }
        if (pj != k) {
            for (int r = 0; r < n; ++r) std::swap(at(r, pj), at(r, k));
            sign = -sign;
        }
        const R pinv = ring_ops<R>::inv(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (ring_ops<R>::exact_zero(at(i, k))) continue;
            const R f = at(i, k) * pinv;
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
        acc *= at(k, k);
    }
    return sign > 0 ? acc : -acc;
}

} // namespace pdwpf
