#include "pdwpf/determinants.hpp"

#include <string>

namespace pdwpf {

namespace {

void require_distinct(const std::vector<Rat>& v, const char* label) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                throw DegenerateRapidities(std::string(label) + " must be pairwise distinct, got " +
                                           v[i].str() + " twice");
}

// Trig nondegeneracy is about e^{2u}: sinh(u-v) = 0 iff U^2 = V^2.
void require_distinct_sq(const std::vector<Rat>& v, const char* label) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            throw DegenerateRapidities(std::string(label) + " must be nonzero");
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] * v[i] == v[j] * v[j])
                throw DegenerateRapidities(std::string(label) + " must have distinct squares (" +
                                           v[i].str() + " vs " + v[j].str() + ")");
    }
}

void require_no_rational_poles(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                               bool reject_equal) {
    for (const Rat& x : xs)
        for (const Rat& y : ys) {
            if (reject_equal && x == y)
                throw SingularWeight("pole: x - y = 0 at x=" + x.str());
            if (x - y + Rat(1) == Rat(0))
                throw SingularWeight("pole: x - y + 1 = 0 at x=" + x.str() + ", y=" + y.str());
        }
}

void require_no_trig_poles(const std::vector<Rat>& Xs, const std::vector<Rat>& Ys, const Rat& G,
                           bool reject_equal) {
    if (G.is_zero()) throw SingularWeight("pole: e^gamma must be nonzero");
    for (const Rat& X : Xs)
        if (X.is_zero()) throw SingularWeight("pole: e^x must be nonzero");
    for (const Rat& Y : Ys)
        if (Y.is_zero()) throw SingularWeight("pole: e^y must be nonzero");
    for (const Rat& X : Xs)
        for (const Rat& Y : Ys) {
            if (reject_equal && X * X == Y * Y)
                throw SingularWeight("pole: [x-y] = 0 at e^x=" + X.str() + ", e^y=" + Y.str());
            if (X * X * G * G == Y * Y)
                throw SingularWeight("pole: [x-y+gamma] = 0 at e^x=" + X.str() +
                                     ", e^y=" + Y.str());
        }
}

// h_r(y, y-1): complete symmetric function in the two variables y, y-1.
Rat h_two_var(int r, const Rat& y) {
    const Rat yb = y - Rat(1);
    Rat acc(0);
    for (int p = 0; p <= r; ++p) acc += y.pow(p) * yb.pow(r - p);
    return acc;
}

} // namespace

Rat izergin_dwpf(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                 const WeightScheme& scheme) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("izergin_dwpf: need |xs| = |ys| >= 1");
    switch (scheme.kind) {
    case SchemeKind::RATIONAL:
        require_distinct(xs, "xs");
        require_distinct(ys, "ys");
        require_no_rational_poles(xs, ys, true);
        return cores::izergin_rational<Rat>(xs, ys, Rat(0));
    case SchemeKind::TRIGONOMETRIC:
        require_distinct_sq(xs, "e^x");
        require_distinct_sq(ys, "e^y");
        require_no_trig_poles(xs, ys, scheme.anisotropy_g, true);
        return cores::izergin_trig<Rat>(xs, ys, scheme.anisotropy_g, Rat(0));
    case SchemeKind::POLYNOMIAL:
        break;
    }
    throw std::invalid_argument("izergin_dwpf: scheme must be RATIONAL or TRIGONOMETRIC");
}

Rat pdwpf_hybrid(const std::vector<Rat>& xs, const std::vector<Rat>& ys, bool h_row_variant) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || n > N) throw std::invalid_argument("pdwpf_hybrid: need 1 <= n <= N");
    require_distinct(xs, "xs");
    require_distinct(ys, "ys");
    require_no_rational_poles(xs, ys, true);
    Rat pref(1);
    for (const Rat& x : xs)
        for (const Rat& y : ys) pref *= x - y;
    const Rat dv = vandermonde(xs, +1) * vandermonde(ys, -1);
    SquareMatrix<Rat> M(N, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            const Rat d = xs[static_cast<size_t>(i)] - ys[static_cast<size_t>(j)];
            M(i, j) = (d * (d + Rat(1))).inv();
        }
    for (int r = N - n - 1, i = n; r >= 0; --r, ++i)
        for (int j = 0; j < N; ++j) {
            const Rat& y = ys[static_cast<size_t>(j)];
            M(i, j) = h_row_variant ? h_two_var(r, y) : y.pow(r);
        }
    Rat val = pref / dv * det_exact(M);
    if (h_row_variant) val /= factorial_rat(N - n);
    return val;
}

Rat pdwpf_kostov(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || n > N) throw std::invalid_argument("pdwpf_kostov: need 1 <= n <= N");
    require_distinct(xs, "xs");
    require_no_rational_poles(xs, ys, false);
    SquareMatrix<Rat> M(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        const Rat& x = xs[static_cast<size_t>(i)];
        Rat s(1);
        for (const Rat& y : ys) s *= (x - y) / (x - y + Rat(1));
        for (int j = 0; j < n; ++j) M(i, j) = x.pow(j) - (x + Rat(1)).pow(j) * s;
    }
    return det_exact(M) / vandermonde(xs, +1);
}

Rat pdwpf_partition_sum(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || n > N) throw std::invalid_argument("pdwpf_partition_sum: need 1 <= n <= N");
    if (n > 30) throw std::invalid_argument("pdwpf_partition_sum: n too large for 2^n sum");
    require_distinct(xs, "xs");
    require_no_rational_poles(xs, ys, false);
    Rat total(0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Rat term(1);
        int m = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) ++m;
        if (m % 2 == 1) term = -term;
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1u)) continue; // i in beta
            const Rat& xb = xs[static_cast<size_t>(i)];
            for (const Rat& y : ys) term *= (xb - y) / (xb + Rat(1) - y);
        }
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) continue; // i in alpha
            const Rat& xa = xs[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) {
                if (!((mask >> j) & 1u)) continue;
                const Rat& xb = xs[static_cast<size_t>(j)];
                term *= (xa - xb - Rat(1)) / (xa - xb);
            }
        }
        total += term;
    }
    return total;
}

Rat pdwpf_trig_hybrid(const std::vector<Rat>& exs, const std::vector<Rat>& eys, const Rat& eg) {
    const int n = static_cast<int>(exs.size());
    const int N = static_cast<int>(eys.size());
    if (n < 1 || n > N) throw std::invalid_argument("pdwpf_trig_hybrid: need 1 <= n <= N");
    require_distinct_sq(exs, "e^x");
    require_distinct_sq(eys, "e^y");
    require_no_trig_poles(exs, eys, eg, true);
    const Rat proto(0);
    Rat pref = cores::sh(eg, proto).pow(n);
    Rat exy(1);
    for (const Rat& X : exs) exy *= X;
    for (const Rat& Y : eys) exy /= Y;
    pref *= exy.pow(N - n + 1);
    for (const Rat& X : exs)
        for (const Rat& Y : eys) pref *= cores::sh_d(X, Y, proto);
    Rat dv(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dv *= cores::sh_d(exs[static_cast<size_t>(j)], exs[static_cast<size_t>(i)], proto);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            dv *= cores::sh_d(eys[static_cast<size_t>(i)], eys[static_cast<size_t>(j)], proto);
    SquareMatrix<Rat> M(N, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            const Rat& X = exs[static_cast<size_t>(i)];
            const Rat& Y = eys[static_cast<size_t>(j)];
            M(i, j) = (cores::sh_d(X, Y, proto) * cores::sh_d(X * eg, Y, proto)).inv();
        }
    for (int r = N - n, i = n; r >= 1; --r, ++i)
        for (int j = 0; j < N; ++j) M(i, j) = eys[static_cast<size_t>(j)].pow(2 * r);
    // The bare determinant overshoots the lattice by 2^C(N-n,2); divide it
    // back out so the value matches the summed-top partition function.
    const Rat fix = Rat(2).pow(static_cast<long>(N - n) * (N - n - 1) / 2).inv();
    return pref / dv * det_exact(M) * fix;
}

Rat pdwpf_trig_kostov(const std::vector<Rat>& exs, const std::vector<Rat>& eys, const Rat& eg) {
    const int n = static_cast<int>(exs.size());
    const int N = static_cast<int>(eys.size());
    if (n < 1 || n > N) throw std::invalid_argument("pdwpf_trig_kostov: need 1 <= n <= N");
    require_distinct_sq(exs, "e^x");
    require_no_trig_poles(exs, eys, eg, false);
    const Rat proto(0);
    SquareMatrix<Rat> M(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        const Rat& X = exs[static_cast<size_t>(i)];
        Rat s(1);
        for (const Rat& Y : eys) s *= cores::sh_d(X, Y, proto) / cores::sh_d(X * eg, Y, proto);
        for (int j = 1; j <= n; ++j)
            M(i, j - 1) =
                X.pow(2 * (j - 1)) * (Rat(1) - eg.pow(N) * s * eg.pow(-2 * (n - j)));
    }
    Rat dv(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dv *= cores::sh_d(exs[static_cast<size_t>(j)], exs[static_cast<size_t>(i)], proto);
    Rat ex(1);
    for (const Rat& X : exs) ex *= X;
    // Same story as the hybrid form: a factor 2^C(n,2) in the bare
    // determinant has to be removed to land on the lattice value.
    const Rat fix = Rat(2).pow(static_cast<long>(n) * (n - 1) / 2).inv();
    return ex.pow(-(n - 1)) * det_exact(M) / dv * fix;
}

std::vector<Rat> bethe_check(const std::vector<Rat>& bs, const std::vector<Rat>& ys,
                             const WeightScheme& scheme) {
    const int n = static_cast<int>(bs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || N < 1) throw std::invalid_argument("bethe_check: empty system");
    std::vector<Rat> res;
    res.reserve(bs.size());
    if (scheme.kind == SchemeKind::RATIONAL) {
        for (int i = 0; i < n; ++i) {
            const Rat& b = bs[static_cast<size_t>(i)];
            Rat lhs(1);
            for (const Rat& y : ys) {
                if (b == y)
                    throw PoleAtCandidate("bethe_check: b - y = 0 at b=" + b.str());
                lhs *= (b - y + Rat(1)) / (b - y);
            }
            Rat rhs(1);
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                const Rat d = b - bs[static_cast<size_t>(k)];
                if (d == Rat(1))
                    throw PoleAtCandidate("bethe_check: b_i - b_k - 1 = 0 at b=" + b.str());
                rhs *= (d + Rat(1)) / (d - Rat(1));
            }
            res.push_back(lhs - rhs);
        }
        return res;
    }
    if (scheme.kind == SchemeKind::TRIGONOMETRIC) {
        const Rat& G = scheme.anisotropy_g;
        const Rat proto(0);
        for (int i = 0; i < n; ++i) {
            const Rat& B = bs[static_cast<size_t>(i)];
            if (B.is_zero()) throw PoleAtCandidate("bethe_check: e^b must be nonzero");
            Rat lhs(1);
            for (const Rat& Y : ys) {
                if (B * B == Y * Y)
                    throw PoleAtCandidate("bethe_check: [b-y] = 0 at e^b=" + B.str());
                lhs *= cores::sh_d(B * G, Y, proto) / cores::sh_d(B, Y, proto);
            }
            Rat rhs = G.pow(N);
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                const Rat& Bk = bs[static_cast<size_t>(k)];
                if (B * B == Bk * Bk * G * G)
                    throw PoleAtCandidate("bethe_check: [b_i-b_k-gamma] = 0 at e^b=" + B.str());
                rhs *= cores::sh_d(B * G, Bk, proto) / cores::sh_d(B, Bk * G, proto);
            }
            res.push_back(lhs - rhs);
        }
        return res;
    }
    throw std::invalid_argument("bethe_check: scheme must be RATIONAL or TRIGONOMETRIC");
}

Rat slavnov_scalar_product(const std::vector<Rat>& xs, const std::vector<Rat>& bs,
                           const std::vector<Rat>& ys) {
    if (xs.size() != bs.size() || xs.empty())
        throw std::invalid_argument("slavnov_scalar_product: need |xs| = |bs| >= 1");
    require_distinct(xs, "xs");
    require_distinct(bs, "bs");
    require_no_rational_poles(xs, ys, false);
    for (const Rat& x : xs)
        for (const Rat& b : bs)
            if (x == b)
                throw DegenerateRapidities("slavnov_scalar_product: x = b at " + x.str());
    for (const Rat& r : bethe_check(bs, ys, WeightScheme::rational()))
        if (!r.is_zero())
            throw NotBetheRoots("slavnov_scalar_product: residual " + r.str() + " is nonzero");
    return cores::slavnov_rational<Rat>(xs, bs, ys, Rat(0));
}

Rat slavnov_scalar_product_trig(const std::vector<Rat>& exs, const std::vector<Rat>& ebs,
                                const std::vector<Rat>& eys, const Rat& eg) {
    const int n = static_cast<int>(exs.size());
    const int N = static_cast<int>(eys.size());
    if (exs.size() != ebs.size() || exs.empty())
        throw std::invalid_argument("slavnov_scalar_product_trig: need |xs| = |bs| >= 1");
    require_distinct_sq(exs, "e^x");
    require_distinct_sq(ebs, "e^b");
    require_no_trig_poles(exs, eys, eg, false);
    for (const Rat& X : exs)
        for (const Rat& B : ebs)
            if (X * X == B * B)
                throw DegenerateRapidities("slavnov_scalar_product_trig: [x-b] = 0");
    for (const Rat& r : bethe_check(ebs, eys, WeightScheme::trigonometric(eg)))
        if (!r.is_zero())
            throw NotBetheRoots("slavnov_scalar_product_trig: residual " + r.str() +
                                " is nonzero");
    const Rat proto(0);
    SquareMatrix<Rat> M(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        const Rat& X = exs[static_cast<size_t>(i)];
        Rat common = eg.pow(N - n);
        for (const Rat& Y : eys)
            common *= cores::sh_d(X, Y, proto) / cores::sh_d(X * eg, Y, proto);
        for (int j = 0; j < n; ++j) {
            Rat t1 = common;
            Rat t2 = eg.pow(-n);
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                const Rat& Bk = ebs[static_cast<size_t>(k)];
                t1 *= cores::sh_d(Bk, X * eg, proto);
                t2 *= cores::sh_d(Bk * eg, X, proto);
            }
            M(i, j) = (t1 - t2) / cores::sh_d(X, ebs[static_cast<size_t>(j)], proto);
        }
    }
    Rat dx(1), db(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            dx *= cores::sh_d(exs[static_cast<size_t>(j)], exs[static_cast<size_t>(i)], proto);
            db *= cores::sh_d(ebs[static_cast<size_t>(i)], ebs[static_cast<size_t>(j)], proto);
        }
    Rat pref = cores::sh(eg, proto).pow(n);
    for (const Rat& B : ebs) pref *= B;
    for (const Rat& X : exs) pref /= X;
    return pref * det_exact(M) / (dx * db);
}

} // namespace pdwpf
