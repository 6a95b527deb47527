#pragma once

#include <utility>
#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/rat.hpp"
#include "pdwpf/ring.hpp"

namespace pdwpf {

// prod_{i<j} (x_j - x_i) for sign=+1, prod_{i<j} (x_i - x_j) for sign=-1.
// Empty and singleton lists give 1.
template <class R>
R vandermonde_t(const std::vector<R>& xs, int sign, const R& proto) {
    R p = ring_ops<R>::one(proto);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            p *= (sign >= 0) ? (xs[j] - xs[i]) : (xs[i] - xs[j]);
    return p;
}

inline Rat vandermonde(const std::vector<Rat>& xs, int sign) {
    return vandermonde_t<Rat>(xs, sign, Rat(0));
}

// Degree of the unique interpolating polynomial through the given points,
// by Newton divided differences.  The zero polynomial reports -1.  Needs at
// least two points and pairwise distinct abscissae.
inline int interpolate_degree(const std::vector<std::pair<Rat, Rat>>& points) {
    const size_t n = points.size();
    if (n < 2) throw std::invalid_argument("interpolate_degree: need at least two points");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("interpolate_degree: repeated abscissa " +
                                        points[i].first.str());
    // Divided-difference table, top row kept.
    std::vector<Rat> col(n);
    for (size_t i = 0; i < n; ++i) col[i] = points[i].second;
    std::vector<Rat> top(n);
    top[0] = col[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            col[i] = (col[i + 1] - col[i]) / (points[i + k].first - points[i].first);
        top[k] = col[0];
    }
    // Newton coefficient of order k is nonzero iff degree >= k somewhere; the
    // degree is the largest k with a nonzero divided difference.
    for (size_t k = n; k-- > 0;)
        if (!top[k].is_zero()) return static_cast<int>(k);
    return -1;
}

// Exact Lagrange evaluation at x of the interpolating polynomial through
// the points (abscissae pairwise distinct).
inline Rat lagrange_eval(const std::vector<std::pair<Rat, Rat>>& points, const Rat& x) {
    const size_t n = points.size();
    if (n == 0) throw std::invalid_argument("lagrange_eval: no points");
    Rat acc(0);
    for (size_t i = 0; i < n; ++i) {
        Rat term = points[i].second;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Rat den = points[i].first - points[j].first;
            if (den.is_zero())
                throw DuplicateAbscissa("lagrange_eval: repeated abscissa " +
                                        points[i].first.str());
            term *= (x - points[j].first) / den;
        }
        acc += term;
    }
    return acc;
}

} // namespace pdwpf
