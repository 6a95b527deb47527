#pragma once

#include <stdexcept>
#include <vector>

#include "pdwpf/ring.hpp"

namespace pdwpf {

// Dense square matrix, row major.  Entries live in an exact ring.
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(int n, const T& fill) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
        if (n < 0) throw std::invalid_argument("SquareMatrix: negative order");
    }

    int order() const { return n_; }

    T& operator()(int i, int j) { return a_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return a_[idx(i, j)]; }

    friend SquareMatrix operator*(const SquareMatrix& m, const SquareMatrix& n) {
        if (m.n_ != n.n_) throw std::invalid_argument("SquareMatrix: order mismatch");
        if (m.n_ == 0) return m;
        SquareMatrix r(m.n_, ring_ops<T>::zero(m(0, 0)));
        for (int i = 0; i < m.n_; ++i)
            for (int k = 0; k < m.n_; ++k)
                for (int j = 0; j < m.n_; ++j) r(i, j) += m(i, k) * n(k, j);
        return r;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("SquareMatrix: index out of range");
        return static_cast<size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<T> a_;
};

} // namespace pdwpf
