#include "pdwpf/numeric.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "pdwpf/determinants.hpp"
#include "pdwpf/errors.hpp"

namespace pdwpf {

RFloat to_rfloat(const Rat& r) {
    return RFloat(r.num().get_str()) / RFloat(r.den().get_str());
}

CFloat to_cfloat(const Rat& r) { return CFloat(to_rfloat(r)); }

RFloat magnitude(const CFloat& z) { return abs(z); }

namespace {

CFloat sh_c(const CFloat& u) { return (u - CFloat(1) / u) / 2; }
CFloat sh_dc(const CFloat& a, const CFloat& b) { return sh_c(a / b); }

std::vector<CFloat> to_cfloats(const std::vector<Rat>& v) {
    std::vector<CFloat> out;
    out.reserve(v.size());
    for (const Rat& r : v) out.push_back(to_cfloat(r));
    return out;
}

// Gaussian elimination with partial pivoting; order stays tiny here.
std::vector<CFloat> solve_linear(std::vector<std::vector<CFloat>> A, std::vector<CFloat> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (abs(A[static_cast<size_t>(r)][static_cast<size_t>(k)]) >
                abs(A[static_cast<size_t>(piv)][static_cast<size_t>(k)]))
                piv = r;
        if (A[static_cast<size_t>(piv)][static_cast<size_t>(k)] == 0)
            return {}; // singular Jacobian, caller restarts
        std::swap(A[static_cast<size_t>(k)], A[static_cast<size_t>(piv)]);
        std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(piv)]);
        for (int r = k + 1; r < n; ++r) {
            const CFloat f =
                A[static_cast<size_t>(r)][static_cast<size_t>(k)] / A[static_cast<size_t>(k)][static_cast<size_t>(k)];
            for (int c = k; c < n; ++c)
                A[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * A[static_cast<size_t>(k)][static_cast<size_t>(c)];
            rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(k)];
        }
    }
    std::vector<CFloat> x(static_cast<size_t>(n), CFloat(0));
    for (int k = n - 1; k >= 0; --k) {
        CFloat s = rhs[static_cast<size_t>(k)];
        for (int c = k + 1; c < n; ++c)
            s -= A[static_cast<size_t>(k)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(k)] = s / A[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return x;
}

// Value and gradient of a product of factors that are linear in the
// unknowns.  Factors are pushed one at a time.
struct ProductGrad {
    CFloat val{1};
    std::vector<CFloat> grad;

    explicit ProductGrad(int n) : grad(static_cast<size_t>(n), CFloat(0)) {}

    // factor f with gradient: coefficient ci on unknown i, ck on unknown k
    // (k < 0 means absent).
    void push(const CFloat& f, int i, const CFloat& ci, int k, const CFloat& ck) {
        for (auto& g : grad) g *= f;
        grad[static_cast<size_t>(i)] += val * ci;
        if (k >= 0) grad[static_cast<size_t>(k)] += val * ck;
        val *= f;
    }
};

struct System {
    std::vector<CFloat> ys2; // rational: ys; trig: Y^2
    CFloat g2{0};            // trig: G^2
    CFloat g2n{0};           // trig: G^(2N)
    bool trig = false;
    int n = 0;

    // F_i and its gradient at z.  Rational unknowns are the roots b_i; trig
    // unknowns are the squares u_i = B_i^2, which clears all square roots.
    void eval(const std::vector<CFloat>& z, int i, CFloat& f,
              std::vector<CFloat>& grad) const {
        const size_t ui = static_cast<size_t>(i);
        ProductGrad p1(n), p2(n);
        if (!trig) {
            for (const CFloat& y : ys2) {
                p1.push(z[ui] - y + 1, i, CFloat(1), -1, CFloat(0));
                p2.push(z[ui] - y, i, CFloat(1), -1, CFloat(0));
            }
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                const size_t uk = static_cast<size_t>(k);
                p1.push(z[ui] - z[uk] - 1, i, CFloat(1), k, CFloat(-1));
                p2.push(z[ui] - z[uk] + 1, i, CFloat(1), k, CFloat(-1));
            }
            f = p1.val - p2.val;
            grad.assign(static_cast<size_t>(n), CFloat(0));
            for (int m = 0; m < n; ++m)
                grad[static_cast<size_t>(m)] =
                    p1.grad[static_cast<size_t>(m)] - p2.grad[static_cast<size_t>(m)];
            return;
        }
        for (const CFloat& y : ys2) {
            p1.push(z[ui] * g2 - y, i, g2, -1, CFloat(0));
            p2.push(z[ui] - y, i, CFloat(1), -1, CFloat(0));
        }
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const size_t uk = static_cast<size_t>(k);
            p1.push(z[ui] - z[uk] * g2, i, CFloat(1), k, -g2);
            p2.push(z[ui] * g2 - z[uk], i, g2, k, CFloat(-1));
        }
        f = p1.val - g2n * p2.val;
        grad.assign(static_cast<size_t>(n), CFloat(0));
        for (int m = 0; m < n; ++m)
            grad[static_cast<size_t>(m)] = p1.grad[static_cast<size_t>(m)] -
                                           g2n * p2.grad[static_cast<size_t>(m)];
    }
};

RFloat residual_norm(const System& sys, const std::vector<CFloat>& z) {
    RFloat s(0);
    CFloat f;
    std::vector<CFloat> g;
    for (int i = 0; i < sys.n; ++i) {
        sys.eval(z, i, f, g);
        s += abs(f);
    }
    return s;
}

} // namespace

std::vector<CFloat> bethe_residuals_numeric(const std::vector<CFloat>& bs,
                                            const std::vector<Rat>& ys,
                                            const WeightScheme& scheme) {
    const int n = static_cast<int>(bs.size());
    const int N = static_cast<int>(ys.size());
    std::vector<CFloat> res;
    res.reserve(bs.size());
    if (scheme.kind != SchemeKind::TRIGONOMETRIC) {
        for (int i = 0; i < n; ++i) {
            const CFloat& b = bs[static_cast<size_t>(i)];
            CFloat lhs(1), rhs(1);
            for (const Rat& y : ys) {
                const CFloat d = b - to_cfloat(y);
                if (d == 0) throw PoleAtCandidate("root sits on a y value");
                lhs *= (d + 1) / d;
            }
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                const CFloat d = b - bs[static_cast<size_t>(k)];
                if (d - 1 == 0) throw PoleAtCandidate("root pair at distance 1");
                rhs *= (d + 1) / (d - 1);
            }
            res.push_back(lhs - rhs);
        }
        return res;
    }
    const CFloat G = to_cfloat(scheme.anisotropy_g);
    for (int i = 0; i < n; ++i) {
        const CFloat& B = bs[static_cast<size_t>(i)];
        if (B == 0) throw PoleAtCandidate("zero multiplicative root");
        CFloat lhs(1), rhs(1);
        for (const Rat& y : ys) {
            const CFloat Y = to_cfloat(y);
            const CFloat den = sh_dc(B, Y);
            if (den == 0) throw PoleAtCandidate("root sits on a y value");
            lhs *= sh_dc(B * G, Y) / den;
        }
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const CFloat& Bk = bs[static_cast<size_t>(k)];
            const CFloat den = sh_dc(B, Bk * G);
            if (den == 0) throw PoleAtCandidate("root pair at distance gamma");
            rhs *= sh_dc(B * G, Bk) / den;
        }
        for (int k = 0; k < N; ++k) rhs *= G;
        res.push_back(lhs - rhs);
    }
    return res;
}

std::vector<CFloat> bethe_solve_numeric(int n, const std::vector<Rat>& ys,
                                        const WeightScheme& scheme, std::uint64_t seed) {
    const int N = static_cast<int>(ys.size());
    if (n < 1 || n > N) throw std::invalid_argument("bethe_solve_numeric: need 1 <= n <= N");
    const bool trig = scheme.kind == SchemeKind::TRIGONOMETRIC;

    System sys;
    sys.n = n;
    sys.trig = trig;
    if (trig) {
        const CFloat G = to_cfloat(scheme.anisotropy_g);
        sys.g2 = G * G;
        sys.g2n = pow(sys.g2, N);
        for (const Rat& y : ys) {
            const CFloat Y = to_cfloat(y);
            sys.ys2.push_back(Y * Y);
        }
    } else {
        sys.ys2 = to_cfloats(ys);
    }

    double scale = 1.0;
    for (const Rat& y : ys) scale = std::max(scale, 1.0 + std::abs(y.to_double()));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    const RFloat res_tol("1e-12");
    const RFloat sep_tol("1e-10");

    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<CFloat> z;
        z.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double re = unif(rng) * scale;
            const double im = unif(rng) * scale + 0.01;
            z.emplace_back(RFloat(re), RFloat(im));
        }

        bool dead = false;
        RFloat norm = residual_norm(sys, z);
        for (int it = 0; it < 160 && !dead; ++it) {
            if (norm < RFloat("1e-80")) break;
            std::vector<std::vector<CFloat>> J(
                static_cast<size_t>(n), std::vector<CFloat>(static_cast<size_t>(n), CFloat(0)));
            std::vector<CFloat> F(static_cast<size_t>(n), CFloat(0));
            std::vector<CFloat> grad;
            for (int i = 0; i < n; ++i) {
                sys.eval(z, i, F[static_cast<size_t>(i)], grad);
                J[static_cast<size_t>(i)] = grad;
            }
            const std::vector<CFloat> step = solve_linear(J, F);
            if (step.empty()) {
                dead = true;
                break;
            }
            RFloat lam(1);
            bool moved = false;
            for (int half = 0; half < 30; ++half) {
                std::vector<CFloat> zt = z;
                for (int i = 0; i < n; ++i)
                    zt[static_cast<size_t>(i)] -= CFloat(lam) * step[static_cast<size_t>(i)];
                const RFloat nt = residual_norm(sys, zt);
                if (nt < norm) {
                    z = std::move(zt);
                    norm = nt;
                    moved = true;
                    break;
                }
                lam /= 2;
            }
            if (!moved) break; // stalled; accept whatever we have
        }
        if (dead || !(norm < RFloat("1e-40"))) continue;

        std::vector<CFloat> roots;
        roots.reserve(z.size());
        if (trig) {
            for (const CFloat& u : z) roots.push_back(sqrt(u));
        } else {
            roots = z;
        }

        bool ok = true;
        for (size_t i = 0; i < roots.size() && ok; ++i)
            for (size_t j = i + 1; j < roots.size() && ok; ++j)
                if (abs(roots[i] - roots[j]) < sep_tol) ok = false;
        if (!ok) continue;
        try {
            for (const CFloat& r : bethe_residuals_numeric(roots, ys, scheme))
                if (!(abs(r) < res_tol)) ok = false;
        } catch (const PoleAtCandidate&) {
            ok = false;
        }
        if (!ok) continue;

        std::sort(roots.begin(), roots.end(), [](const CFloat& a, const CFloat& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return roots;
    }
    throw NoConvergence("bethe_solve_numeric: restart budget exhausted at n=" +
                        std::to_string(n) + ", N=" + std::to_string(N));
}

CFloat pdwpf_kostov_numeric(const std::vector<CFloat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    if (n < 1) throw std::invalid_argument("pdwpf_kostov_numeric: empty xs");
    const std::vector<CFloat> yf = to_cfloats(ys);
    std::vector<std::vector<CFloat>> M(static_cast<size_t>(n),
                                       std::vector<CFloat>(static_cast<size_t>(n), CFloat(0)));
    for (int i = 0; i < n; ++i) {
        const CFloat& x = xs[static_cast<size_t>(i)];
        CFloat s(1);
        for (const CFloat& y : yf) s *= (x - y) / (x - y + 1);
        CFloat xp(1), xp1(1);
        for (int j = 0; j < n; ++j) {
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = xp - xp1 * s;
            xp *= x;
            xp1 *= x + 1;
        }
    }
    // determinant by the same pivoted elimination as the linear solver
    CFloat detv(1);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (abs(M[static_cast<size_t>(r)][static_cast<size_t>(k)]) >
                abs(M[static_cast<size_t>(piv)][static_cast<size_t>(k)]))
                piv = r;
        if (M[static_cast<size_t>(piv)][static_cast<size_t>(k)] == 0) return CFloat(0);
        if (piv != k) {
            std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(piv)]);
            detv = -detv;
        }
        detv *= M[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int r = k + 1; r < n; ++r) {
            const CFloat f = M[static_cast<size_t>(r)][static_cast<size_t>(k)] /
                             M[static_cast<size_t>(k)][static_cast<size_t>(k)];
            for (int c = k; c < n; ++c)
                M[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * M[static_cast<size_t>(k)][static_cast<size_t>(c)];
        }
    }
    CFloat dv(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dv *= xs[static_cast<size_t>(j)] - xs[static_cast<size_t>(i)];
    return detv / dv;
}

CFloat slavnov_numeric(const std::vector<Rat>& xs, const std::vector<CFloat>& bs,
                       const std::vector<Rat>& ys) {
    if (xs.size() != bs.size())
        throw std::invalid_argument("slavnov_numeric: |xs| must equal |bs|");
    const RFloat tol("1e-12");
    for (const CFloat& r : bethe_residuals_numeric(bs, ys, WeightScheme::rational()))
        if (!(abs(r) < tol))
            throw NotBetheRoots("slavnov_numeric: residual above 1e-12");
    const CFloat proto(0);
    return cores::slavnov_rational(to_cfloats(xs), bs, to_cfloats(ys), proto);
}

CFloat oracle_scalar_product_numeric(const std::vector<Rat>& xs, const std::vector<CFloat>& bs,
                                     const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || static_cast<int>(bs.size()) != n || n > N)
        throw std::invalid_argument("oracle_scalar_product_numeric: bad sizes");
    if (N > 20) throw std::invalid_argument("oracle_scalar_product_numeric: N too large");

    constexpr int Rr = 1, Ll = -1, Uu = 1;
    std::vector<CFloat> rows = to_cfloats(xs);
    rows.insert(rows.end(), bs.begin(), bs.end());
    std::vector<int> left(static_cast<size_t>(n), Ll), right(static_cast<size_t>(n), Rr);
    left.insert(left.end(), static_cast<size_t>(n), Rr);
    right.insert(right.end(), static_cast<size_t>(n), Ll);

    const std::vector<CFloat> yf = to_cfloats(ys);
    const unsigned states = 1u << N;
    const unsigned full = states - 1u;
    std::vector<CFloat> amp(states, CFloat(0));
    amp[full] = CFloat(1); // bottom boundary all up

    auto hidx = [](int h) { return h == Rr ? 1 : 0; };
    std::vector<CFloat> cur[2], nxt[2];
    for (size_t row = 0; row < rows.size(); ++row) {
        const CFloat& x = rows[row];
        // rational-scheme weights per column: a=1, b=(x-y)/(x-y+1), c=1/(x-y+1)
        std::vector<CFloat> wb(static_cast<size_t>(N)), wc(static_cast<size_t>(N));
        for (int j = 0; j < N; ++j) {
            const CFloat d = x - yf[static_cast<size_t>(j)];
            wb[static_cast<size_t>(j)] = d / (d + 1);
            wc[static_cast<size_t>(j)] = CFloat(1) / (d + 1);
        }
        cur[0].assign(states, CFloat(0));
        cur[1].assign(states, CFloat(0));
        cur[hidx(left[row])] = amp;
        for (int j = 0; j < N; ++j) {
            nxt[0].assign(states, CFloat(0));
            nxt[1].assign(states, CFloat(0));
            for (int hc = 0; hc < 2; ++hc) {
                const int h = (hc == 1) ? Rr : Ll;
                for (unsigned s = 0; s < states; ++s) {
                    const CFloat& a = cur[hc][s];
                    if (a == 0) continue;
                    const int vb = (s >> j) & 1u ? 1 : -1;
                    // transitions mirror the exact oracle's table
                    if (h == Rr && vb == Uu) {
                        nxt[1][s | (1u << j)] += a; // a+ weight 1
                    } else if (h == Rr) {
                        nxt[0][s | (1u << j)] += a * wc[static_cast<size_t>(j)]; // c+
                        nxt[1][s & ~(1u << j)] += a * wb[static_cast<size_t>(j)]; // b-
                    } else if (vb == Uu) {
                        nxt[0][s | (1u << j)] += a * wb[static_cast<size_t>(j)]; // b+
                        nxt[1][s & ~(1u << j)] += a * wc[static_cast<size_t>(j)]; // c-
                    } else {
                        nxt[0][s & ~(1u << j)] += a; // a- weight 1
                    }
                }
            }
            cur[0].swap(nxt[0]);
            cur[1].swap(nxt[1]);
        }
        amp = cur[hidx(right[row])];
    }
    return amp[full]; // top boundary all up
}

} // namespace pdwpf
