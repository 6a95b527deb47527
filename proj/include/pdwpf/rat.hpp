#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pdwpf {

// Exact rational scalar, canonical at all times: positive denominator,
// gcd(|num|, den) = 1, zero stored as 0/1. Thin wrapper over GMP's mpq
// so the rest of the code never touches raw mpq_t state.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}          // NOLINT: implicit by design, literals abound
    Rat(long n, long d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "p", base 10, optional leading '-' on p only.
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const;
    Rat pow(long e) const;   // negative e inverts (nonzero base required)
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    std::string str() const;        // canonical "p/q" (or "p" when q = 1)
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat factorial_rat(int n);
Rat binomial_rat(int n, int k);   // 0 outside the triangle

// Parses a comma-separated list of "p/q" literals ("" -> empty).
std::vector<Rat> parse_rat_list(const std::string& csv);

} // namespace pdwpf
