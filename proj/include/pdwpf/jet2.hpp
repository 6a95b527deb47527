#pragma once

#include "pdwpf/rat.hpp"

#include <stdexcept>
#include <vector>

namespace pdwpf {

// Degree-2 truncated polynomial (jet) in nvar variables over Rat.
// Stores value, gradient and the lower triangle of the quadratic part
// densely; every ring operation drops all degree >= 3 terms. Evaluating
// a rational expression at (y_1,...,y_n) = (eps_1,...,eps_n) therefore
// yields the exact value, gradient and Hessian at the base point.
class Jet2 {
public:
    static constexpr int max_vars = 16;

    explicit Jet2(int nvar, Rat value = 0) : n_(nvar), val_(std::move(value)) {
        if (nvar < 1 || nvar > max_vars)
            throw std::invalid_argument("Jet2: variable count out of range");
        lin_.assign(n_, Rat(0));
        quad_.assign(static_cast<size_t>(n_) * (n_ + 1) / 2, Rat(0));
    }

    // The i-th coordinate jet: base + eps_i.
    static Jet2 variable(int nvar, int i, Rat base = 0) {
        Jet2 j(nvar, std::move(base));
        j.lin_.at(i) = 1;
        return j;
    }

    int vars() const { return n_; }
    const Rat& value() const { return val_; }
    const Rat& d1(int i) const { return lin_.at(i); }
    // Coefficient of y_i*y_j (i != j) resp. y_i^2 (i == j).
    const Rat& coeff2(int i, int j) const { return quad_.at(tidx(i, j)); }

    Rat& value() { return val_; }
    Rat& d1(int i) { return lin_.at(i); }
    Rat& coeff2(int i, int j) { return quad_.at(tidx(i, j)); }

    Jet2 make_zero() const { return Jet2(n_); }
    Jet2 make_one() const { return Jet2(n_, 1); }
    Jet2 make_const(Rat c) const { return Jet2(n_, std::move(c)); }

    bool is_zero() const {
        if (!val_.is_zero())
            return false;
        for (const auto& c : lin_)
            if (!c.is_zero())
                return false;
        for (const auto& c : quad_)
            if (!c.is_zero())
                return false;
        return true;
    }
    // A unit of the truncated ring: invertible iff the constant term is.
    bool is_unit() const { return !val_.is_zero(); }

    Jet2 operator-() const {
        Jet2 r(*this);
        r.val_ = -r.val_;
        for (auto& c : r.lin_)
            c = -c;
        for (auto& c : r.quad_)
            c = -c;
        return r;
    }

    Jet2& operator+=(const Jet2& o) {
        match(o);
        val_ += o.val_;
        for (int i = 0; i < n_; ++i)
            lin_[i] += o.lin_[i];
        for (size_t k = 0; k < quad_.size(); ++k)
            quad_[k] += o.quad_[k];
        return *this;
    }
    Jet2& operator-=(const Jet2& o) { return *this += -o; }

    Jet2& operator*=(const Jet2& o) {
        match(o);
        std::vector<Rat> q(quad_.size(), Rat(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j) {
                Rat c = val_ * o.quad_[tidx(i, j)] + o.val_ * quad_[tidx(i, j)];
                if (i == j) {
                    c += lin_[i] * o.lin_[i];
                } else {
                    c += lin_[i] * o.lin_[j] + lin_[j] * o.lin_[i];
                }
                q[tidx(i, j)] = std::move(c);
            }
        std::vector<Rat> l(n_, Rat(0));
        for (int i = 0; i < n_; ++i)
            l[i] = val_ * o.lin_[i] + o.val_ * lin_[i];
        val_ *= o.val_;
        lin_ = std::move(l);
        quad_ = std::move(q);
        return *this;
    }

    // Division by a unit: multiply by the truncated inverse
    // 1/(a0 + u) = (1 - u/a0 + (u/a0)^2) / a0 with u the positive-degree part.
    Jet2 inv() const {
        if (!is_unit())
            throw std::domain_error("Jet2: inverse of non-unit (zero constant term)");
        Jet2 u(*this);
        u.val_ = 0;
        Rat a0i = val_.inv();
        Jet2 un = u * make_const(a0i);       // u / a0, no constant term
        Jet2 r = make_const(a0i) * (make_one() - un + un * un);
        return r;
    }
    Jet2& operator/=(const Jet2& o) { return *this *= o.inv(); }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
    friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }

    friend bool operator==(const Jet2& a, const Jet2& b) {
        return a.n_ == b.n_ && a.val_ == b.val_ && a.lin_ == b.lin_ && a.quad_ == b.quad_;
    }
    friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

private:
    size_t tidx(int i, int j) const {
        if (j > i)
            std::swap(i, j);
        if (i < 0 || i >= n_ || j < 0)
            throw std::out_of_range("Jet2: index");
        return static_cast<size_t>(i) * (i + 1) / 2 + j;
    }
    void match(const Jet2& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("Jet2: mixed variable counts");
    }

    int n_;
    Rat val_;
    std::vector<Rat> lin_;
    std::vector<Rat> quad_;   // lower triangle, row-major
};

} // namespace pdwpf
