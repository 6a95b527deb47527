#pragma once

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/ring.hpp"

namespace pdwpf {

// Truncated Laurent series in one variable eps over a coefficient ring C,
// with an honest precision window.  A value is either exactly zero, or
//
//     sum_{k=0}^{len-1} coeffs_[k] * eps^(lead_+k)  +  O(eps^(lead_+len)).
//
// The horizon lead_+len is what arithmetic propagates: addition keeps the
// weaker of the two horizons, multiplication of normalized series keeps
// min(len_a, len_b) known coefficients.  When cancellation consumes every
// known coefficient the value degrades to "unknown zero": no coefficients,
// only the statement O(eps^lead_).  Asking such a value for a coefficient at
// or past its horizon, or for its inverse, throws WindowTooSmall rather than
// guessing.
//
// Normalization strips *exact* zeros from the front only.  Over a nested
// coefficient ring the front entry may be a non-exact unknown zero; it stays
// put and the uncertainty lives inside C where it belongs.
template <class C>
class LaurentJet {
public:
    static constexpr int default_window = 8;

    // Exact zero with shape context for minting coefficients later.
    explicit LaurentJet(C proto, int window = default_window)
        : proto_(std::move(proto)), window_(window), exact_zero_(true), lead_(0) {
        if (window_ < 1) throw std::invalid_argument("LaurentJet: window must be >= 1");
    }

    static LaurentJet monomial(const C& coeff, int exponent, int window = default_window) {
        LaurentJet r(coeff, window);
        if (ring_ops<C>::exact_zero(coeff)) return r;
        r.exact_zero_ = false;
        r.lead_ = exponent;
        r.coeffs_.assign(static_cast<size_t>(window), ring_ops<C>::zero(coeff));
        r.coeffs_[0] = coeff;
        return r;
    }

    static LaurentJet constant(const C& value, int window = default_window) {
        return monomial(value, 0, window);
    }

    // eps^k itself (k may be negative).
    static LaurentJet variable(const C& proto, int exponent, int window = default_window) {
        return monomial(ring_ops<C>::one(proto), exponent, window);
    }

    // Ring-protocol members; elements mint peers that share their context.
    LaurentJet make_zero() const { return LaurentJet(proto_, window_); }
    LaurentJet make_one() const { return constant(ring_ops<C>::one(proto_), window_); }
    LaurentJet make_const_rat(const Rat& v) const {
        return constant(ring_ops<C>::from_rat(proto_, v), window_);
    }

    const C& proto() const { return proto_; }
    int window() const { return window_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool known_empty() const { return !exact_zero_ && coeffs_.empty(); }
    int lead() const {
        if (exact_zero_ || coeffs_.empty())
            throw std::logic_error("LaurentJet: no leading term");
        return lead_;
    }

    // A unit needs a leading coefficient that is itself invertible.
    bool is_unit() const {
        return !exact_zero_ && !coeffs_.empty() && ring_ops<C>::unit(coeffs_.front());
    }

    // Coefficient of eps^exponent.  Below every known/asserted term the
    // coefficient is exactly zero; at or past the horizon it is unknowable.
    C coefficient(int exponent) const {
        if (exact_zero_) return ring_ops<C>::zero(proto_);
        if (exponent < lead_) return ring_ops<C>::zero(proto_);
        if (exponent >= horizon())
            throw WindowTooSmall("LaurentJet: coefficient at eps^" + std::to_string(exponent) +
                                 " lies beyond the precision horizon eps^" +
                                 std::to_string(horizon()));
        return coeffs_[static_cast<size_t>(exponent - lead_)];
    }

    LaurentJet operator-() const {
        LaurentJet r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentJet& operator+=(const LaurentJet& o) { return *this = add(*this, o); }
    LaurentJet& operator-=(const LaurentJet& o) { return *this = add(*this, -o); }
    LaurentJet& operator*=(const LaurentJet& o) { return *this = mul(*this, o); }
    LaurentJet& operator/=(const LaurentJet& o) { return *this = mul(*this, o.inv()); }

    friend LaurentJet operator+(LaurentJet a, const LaurentJet& b) { return add(a, b); }
    friend LaurentJet operator-(LaurentJet a, const LaurentJet& b) { return add(a, -b); }
    friend LaurentJet operator*(LaurentJet a, const LaurentJet& b) { return mul(a, b); }
    friend LaurentJet operator/(LaurentJet a, const LaurentJet& b) { return mul(a, b.inv()); }

    LaurentJet inv() const {
        if (exact_zero_) throw std::domain_error("LaurentJet: inverse of exact zero");
        if (coeffs_.empty())
            throw WindowTooSmall("LaurentJet: cannot invert a value known only as O(eps^" +
                                 std::to_string(lead_) + ")");
        if (!ring_ops<C>::unit(coeffs_.front()))
            throw WindowTooSmall("LaurentJet: leading coefficient is not invertible");
        const C c0i = ring_ops<C>::inv(coeffs_.front());
        const size_t len = coeffs_.size();
        std::vector<C> d(len, ring_ops<C>::zero(proto_));
        d[0] = c0i;
        for (size_t k = 1; k < len; ++k) {
            C s = ring_ops<C>::zero(proto_);
            for (size_t j = 1; j <= k; ++j) s += coeffs_[j] * d[k - j];
            d[k] = -(c0i * s);
        }
        LaurentJet r(proto_, window_);
        r.exact_zero_ = false;
        r.lead_ = -lead_;
        r.coeffs_ = std::move(d);
        return r;
    }

private:
    static constexpr int inf_horizon = std::numeric_limits<int>::max() / 2;

    // First exponent whose coefficient is unknown.  For an unknown zero the
    // stored lead_ *is* the horizon.
    int horizon() const {
        if (exact_zero_) return inf_horizon;
        return lead_ + static_cast<int>(coeffs_.size());
    }

    void strip_front() {
        size_t k = 0;
        while (k < coeffs_.size() && ring_ops<C>::exact_zero(coeffs_[k])) ++k;
        if (k > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
            lead_ += static_cast<int>(k);
        }
    }

    static LaurentJet add(const LaurentJet& a, const LaurentJet& b) {
        if (a.exact_zero_) return b;
        if (b.exact_zero_) return a;
        const int hz = std::min(a.horizon(), b.horizon());
        // For an unknown zero lead_ is its horizon; below it the value is an
        // exact zero, so min of the two leads is the first candidate term.
        const int lo = std::min(a.lead_, b.lead_);
        LaurentJet r(a.proto_, std::min(a.window_, b.window_));
        r.exact_zero_ = false;
        if (hz <= lo) {
            r.lead_ = hz; // unknown zero
            return r;
        }
        r.lead_ = lo;
        r.coeffs_.assign(static_cast<size_t>(hz - lo), ring_ops<C>::zero(a.proto_));
        auto accumulate = [&](const LaurentJet& s) {
            for (size_t k = 0; k < s.coeffs_.size(); ++k) {
                const int e = s.lead_ + static_cast<int>(k);
                if (e >= hz) break;
                r.coeffs_[static_cast<size_t>(e - lo)] += s.coeffs_[k];
            }
        };
        accumulate(a);
        accumulate(b);
        r.strip_front();
        if (r.coeffs_.empty()) r.lead_ = hz;
        return r;
    }

    static LaurentJet mul(const LaurentJet& a, const LaurentJet& b) {
        LaurentJet r(a.exact_zero_ ? b.proto_ : a.proto_, std::min(a.window_, b.window_));
        if (a.exact_zero_ || b.exact_zero_) return r;
        r.exact_zero_ = false;
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            // O(eps^p) * (c eps^q + ...) = O(eps^(p+q)); likewise both unknown.
            r.lead_ = a.lead_ + b.lead_;
            return r;
        }
        const size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
        r.lead_ = a.lead_ + b.lead_;
        r.coeffs_.assign(len, ring_ops<C>::zero(a.proto_));
        for (size_t i = 0; i < len; ++i)
            for (size_t j = 0; i + j < len && j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        const int hz = r.lead_ + static_cast<int>(len);
        r.strip_front();
        if (r.coeffs_.empty()) r.lead_ = hz;
        return r;
    }

    C proto_;
    int window_;
    bool exact_zero_;
    int lead_;
    std::vector<C> coeffs_;
};

using LaurentRat = LaurentJet<Rat>;
using LaurentRat2 = LaurentJet<LaurentJet<Rat>>;

} // namespace pdwpf
