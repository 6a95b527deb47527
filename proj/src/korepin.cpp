#include "pdwpf/korepin.hpp"

#include <algorithm>
#include <utility>

#include "pdwpf/det.hpp"
#include "pdwpf/matrix.hpp"
#include "pdwpf/poly.hpp"

namespace pdwpf {

namespace {

void require_distinct(const std::vector<Rat>& v, const char* label) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                throw DegenerateRapidities(std::string(label) + " must be pairwise distinct");
}

Rat zeta1(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    require_distinct(xs, "xs");
    require_distinct(ys, "ys");
    Rat pref(1);
    for (const Rat& x : xs)
        for (const Rat& y : ys) {
            const Rat d = x - y;
            if (d.is_zero() || d + Rat(1) == Rat(0))
                throw DegenerateRapidities("zeta1: x - y in {0, -1} at x=" + x.str() +
                                           ", y=" + y.str());
            pref *= d * (d + Rat(1));
        }
    const Rat dv = vandermonde(xs, +1) * vandermonde(ys, -1);
    SquareMatrix<Rat> M(N, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            const Rat d = xs[static_cast<size_t>(i)] - ys[static_cast<size_t>(j)];
            M(i, j) = (d * (d + Rat(1))).inv();
        }
    for (int r = N - n - 1, i = n; r >= 0; --r, ++i)
        for (int j = 0; j < N; ++j) M(i, j) = ys[static_cast<size_t>(j)].pow(r);
    return pref / dv * det_exact(M);
}

Rat zeta2(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    require_distinct(xs, "xs");
    SquareMatrix<Rat> M(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        const Rat& x = xs[static_cast<size_t>(i)];
        Rat p1(1), p2(1);
        for (const Rat& y : ys) {
            p1 *= x - y + Rat(1); // x - ybar with ybar = y - 1
            p2 *= x - y;
        }
        for (int j = 0; j < n; ++j)
            M(i, j) = x.pow(j) * p1 - (x + Rat(1)).pow(j) * p2;
    }
    return det_exact(M) / vandermonde(xs, +1);
}

// Deterministic abscissa stream 0, 1, -1, 2, -2, ... skipping given values.
std::vector<Rat> clean_abscissae(int count, const std::vector<Rat>& avoid) {
    std::vector<Rat> out;
    long k = 0;
    while (static_cast<int>(out.size()) < count) {
        const int copies = k == 0 ? 1 : 2;
        for (int s = 0; s < copies && static_cast<int>(out.size()) < count; ++s) {
            const Rat cand(s == 0 ? k : -k);
            if (std::find(avoid.begin(), avoid.end(), cand) == avoid.end()) out.push_back(cand);
        }
        ++k;
    }
    return out;
}

// Pole-free sample values for the last x slot of either variant.
std::vector<Rat> avoid_list(const std::vector<Rat>& xs_head, const std::vector<Rat>& ys) {
    std::vector<Rat> avoid = xs_head;
    for (const Rat& y : ys) {
        avoid.push_back(y);
        avoid.push_back(y - Rat(1));
        avoid.push_back(y + Rat(1));
    }
    return avoid;
}

} // namespace

Rat zeta(ZetaVariant variant, const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    const int N = static_cast<int>(ys.size());
    if (n < 1 || n > N) throw std::invalid_argument("zeta: need 1 <= n <= N");
    return variant == ZetaVariant::ZETA1 ? zeta1(xs, ys) : zeta2(xs, ys);
}

DegreeReport check_property_A(ZetaVariant variant, const std::vector<Rat>& xs_head,
                              const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs_head.size()) + 1;
    const int N = static_cast<int>(ys.size());
    if (n > N) throw std::invalid_argument("check_property_A: need n <= N");
    const std::vector<Rat> ts = clean_abscissae(2 * N + 2, avoid_list(xs_head, ys));
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(ts.size());
    for (const Rat& t : ts) {
        std::vector<Rat> xs = xs_head;
        xs.push_back(t);
        pts.emplace_back(t, zeta(variant, xs, ys));
    }
    DegreeReport rep;
    rep.degree = interpolate_degree(pts);
    rep.coarse_bound = 2 * N - 1;
    rep.sharp_bound = variant == ZetaVariant::ZETA1 ? 2 * N - n - 1 : N;
    rep.pass = rep.degree <= rep.coarse_bound;
    return rep;
}

bool check_property_B(ZetaVariant variant, const std::vector<Rat>& xs,
                      const std::vector<Rat>& ys, const std::vector<int>& perm) {
    if (perm.size() != ys.size())
        throw std::invalid_argument("check_property_B: permutation size mismatch");
    std::vector<Rat> py(ys.size(), Rat(0));
    std::vector<bool> seen(ys.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        const int p = perm[i];
        if (p < 0 || p >= static_cast<int>(ys.size()) || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("check_property_B: not a permutation");
        seen[static_cast<size_t>(p)] = true;
        py[i] = ys[static_cast<size_t>(p)];
    }
    return zeta(variant, xs, py) == zeta(variant, xs, ys);
}

namespace {

// zeta with the last x slot forced to `target`, by direct evaluation where
// the formula allows it and by exact Lagrange interpolation across the pole
// otherwise.
Rat zeta_at_last_x(ZetaVariant variant, const std::vector<Rat>& xs_head,
                   const std::vector<Rat>& ys, const Rat& target) {
    if (variant == ZetaVariant::ZETA2) {
        std::vector<Rat> xs = xs_head;
        xs.push_back(target);
        return zeta(variant, xs, ys);
    }
    const int N = static_cast<int>(ys.size());
    std::vector<Rat> avoid = avoid_list(xs_head, ys);
    const std::vector<Rat> ts = clean_abscissae(2 * N + 2, avoid);
    std::vector<std::pair<Rat, Rat>> pts;
    for (const Rat& t : ts) {
        std::vector<Rat> xs = xs_head;
        xs.push_back(t);
        pts.emplace_back(t, zeta(variant, xs, ys));
    }
    return lagrange_eval(pts, target);
}

} // namespace

bool check_property_C(ZetaVariant variant, const std::vector<Rat>& xs,
                      const std::vector<Rat>& ys) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw std::invalid_argument("check_property_C: need n >= 2");
    std::vector<Rat> head(xs.begin(), xs.end() - 1);
    std::vector<Rat> ys_head(ys.begin(), ys.end() - 1);
    const Rat yN = ys.back();
    const Rat sub = zeta(variant, head, ys_head);

    Rat f1(1);
    for (const Rat& y : ys_head) f1 *= yN - y + Rat(1);
    for (const Rat& x : head) f1 *= x - (yN - Rat(1));
    if (zeta_at_last_x(variant, head, ys, yN) != f1 * sub) return false;

    Rat f2(1);
    for (const Rat& y : ys_head) f2 *= yN - y - Rat(1);
    for (const Rat& x : head) f2 *= x - yN;
    return zeta_at_last_x(variant, head, ys, yN - Rat(1)) == f2 * sub;
}

bool check_property_D(const std::vector<Rat>& ys) {
    const int N = static_cast<int>(ys.size());
    if (N < 1) throw std::invalid_argument("check_property_D: empty ys");
    bool ys_distinct = true;
    for (size_t i = 0; i < ys.size() && ys_distinct; ++i)
        for (size_t j = i + 1; j < ys.size(); ++j)
            if (ys[i] == ys[j]) {
                ys_distinct = false;
                break;
            }
    const std::vector<Rat> ts = clean_abscissae(2 * N + 1, avoid_list({}, ys));
    for (const Rat& x1 : ts) {
        Rat lsum(0);
        for (int l = 1; l <= N; ++l) {
            Rat t(1);
            for (int k = 0; k < l - 1; ++k) t *= x1 - ys[static_cast<size_t>(k)];
            for (int k = l; k < N; ++k) t *= x1 - ys[static_cast<size_t>(k)] + Rat(1);
            lsum += t;
        }
        Rat p1(1), p2(1);
        for (const Rat& y : ys) {
            p1 *= x1 - y + Rat(1);
            p2 *= x1 - y;
        }
        if (lsum != p1 - p2) return false;
        if (lsum != zeta(ZetaVariant::ZETA2, {x1}, ys)) return false;
        // the first variant needs distinct ys to be evaluable at all
        if (ys_distinct && lsum != zeta(ZetaVariant::ZETA1, {x1}, ys)) return false;
    }
    return true;
}

} // namespace pdwpf
