#include "pdwpf/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace pdwpf {

Rat::Rat(long n, long d) {
    if (d == 0)
        throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("Rat::parse: empty literal");
    std::string::size_type slash = s.find('/');
    auto check_int = [](const std::string& t, bool allow_minus) {
        if (t.empty())
            return false;
        std::string::size_type i = 0;
        if (allow_minus && t[0] == '-')
            i = 1;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string p = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string q = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!check_int(p, true) || !check_int(q, false))
        throw std::invalid_argument("Rat::parse: bad literal '" + s + "'");
    mpq_class v{mpz_class(p), mpz_class(q)};
    if (v.get_den() == 0)
        throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(v);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero())
        throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e < 0)
        return inv().pow(-e);
    Rat base = *this, acc = 1;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat factorial_rat(int n) {
    Rat f = 1;
    for (int k = 2; k <= n; ++k)
        f *= Rat(k);
    return f;
}

Rat binomial_rat(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Rat b = 1;
    for (int i = 0; i < k; ++i)
        b = b * Rat(n - i) / Rat(i + 1);
    return b;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    if (csv.empty())
        return out;
    std::string::size_type pos = 0;
    while (true) {
        std::string::size_type comma = csv.find(',', pos);
        out.push_back(Rat::parse(csv.substr(pos, comma - pos)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace pdwpf
