#include "pdwpf/symfun.hpp"

#include <string>

#include "pdwpf/det.hpp"
#include "pdwpf/matrix.hpp"

namespace pdwpf {

Rat elementary_e(int k, const std::vector<Rat>& vars) {
    if (k < 0 || k > static_cast<int>(vars.size())) return Rat(0);
    std::vector<Rat> e(static_cast<size_t>(k) + 1, Rat(0));
    e[0] = Rat(1);
    for (const Rat& x : vars)
        for (int j = k; j >= 1; --j) e[static_cast<size_t>(j)] += x * e[static_cast<size_t>(j) - 1];
    return e[static_cast<size_t>(k)];
}

Rat discrete_derivative(int i, const std::vector<Rat>& vars, int m) {
    if (m < 0 || m >= static_cast<int>(vars.size()))
        throw std::invalid_argument("discrete_derivative: variable index out of range");
    const Rat& xm = vars[static_cast<size_t>(m)];
    if (xm.is_zero())
        throw DivisionByZeroVariable("discrete_derivative: variable x_" + std::to_string(m) +
                                     " is zero");
    std::vector<Rat> hat = vars;
    hat.erase(hat.begin() + m);
    const Rat q = (complete_h(i, vars) - complete_h(i, hat)) / xm;
    if (q != complete_h(i - 1, vars))
        throw std::logic_error("discrete_derivative: recurrence identity violated");
    return q;
}

Rat coeff_c(int i, int k, const std::vector<Rat>& xs, int n, int N) {
    if (static_cast<int>(xs.size()) != n)
        throw std::invalid_argument("coeff_c: |xs| must equal n");
    if (i < 1 || i > N) throw std::invalid_argument("coeff_c: row index out of range");
    std::vector<Rat> pool;
    pool.reserve(2 * xs.size());
    if (i <= n) {
        for (int j = 0; j < n; ++j) {
            if (j == i - 1) continue;
            pool.push_back(-xs[static_cast<size_t>(j)]);
        }
        for (int j = 0; j < n; ++j) {
            if (j == i - 1) continue;
            pool.push_back(-(xs[static_cast<size_t>(j)] + Rat(1)));
        }
        return elementary_e(2 * n - k - 1, pool);
    }
    for (const Rat& x : xs) pool.push_back(-x);
    for (const Rat& x : xs) pool.push_back(-(x + Rat(1)));
    return elementary_e(2 * n - k + N - i + 1, pool);
}

Rat coeff_d(int k, int j, const std::vector<Rat>& ys, int N) {
    if (static_cast<int>(ys.size()) != N)
        throw std::invalid_argument("coeff_d: |ys| must equal N");
    std::vector<Rat> neg;
    neg.reserve(ys.size());
    for (const Rat& y : ys) neg.push_back(-y);
    Rat tot(0);
    for (int l = 0; l <= N; ++l) {
        const Rat cc = binomial_rat(N - l, k - j);
        const Rat dd = binomial_rat(j - 1, k - N + l - 1);
        if (cc.is_zero() && dd.is_zero()) continue;
        tot += (cc - dd) * elementary_e(l, neg);
    }
    return tot;
}

TauSpec make_tau_ik(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    TauSpec s;
    s.source = TauSource::TAU_IK;
    s.params = xs;
    s.miwa = ys;
    s.n = static_cast<int>(xs.size());
    s.N = static_cast<int>(ys.size());
    if (s.n < 1 || s.n > s.N) throw std::invalid_argument("make_tau_ik: need 1 <= n <= N");
    return s;
}

TauSpec make_tau_s(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    TauSpec s;
    s.source = TauSource::TAU_S;
    s.params = ys;
    s.miwa = xs;
    s.n = static_cast<int>(xs.size());
    s.N = static_cast<int>(ys.size());
    if (s.n < 1 || s.n > s.N) throw std::invalid_argument("make_tau_s: need 1 <= n <= N");
    return s;
}

int tau_dim(const TauSpec& spec) {
    return spec.source == TauSource::TAU_IK ? spec.N : spec.n;
}

namespace {

std::vector<Rat> build_multiset(const TauSpec& spec, const MultiplicityVector& mult) {
    if (mult.size() != spec.miwa.size())
        throw std::invalid_argument("tau: multiplicity vector size mismatch");
    int total = 0;
    for (int m : mult) {
        if (m < 0) throw std::invalid_argument("tau: negative multiplicity");
        total += m;
    }
    if (total > spec.N + 6)
        throw std::invalid_argument("tau: total multiplicity exceeds cap " +
                                    std::to_string(spec.N + 6));
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(total));
    for (size_t i = 0; i < mult.size(); ++i)
        for (int c = 0; c < mult[i]; ++c) v.push_back(spec.miwa[i]);
    return v;
}

Rat entry_on(const TauSpec& spec, const std::vector<Rat>& multiset, int i, int j) {
    const int n = spec.n, N = spec.N;
    Rat acc(0);
    if (spec.source == TauSource::TAU_IK) {
        for (int k = 1; k <= N + n; ++k) {
            const Rat h = complete_h(k - (j + 1), multiset);
            if (h.is_zero()) continue;
            acc += coeff_c(i + 1, k, spec.params, n, N) * h;
        }
        return acc;
    }
    for (int k = 1; k <= N + n; ++k) {
        const Rat h = complete_h(k - (i + 1), multiset);
        if (h.is_zero()) continue;
        acc += h * coeff_d(k, j + 1, spec.params, N);
    }
    return acc;
}

} // namespace

Rat tau_entry(const TauSpec& spec, const MultiplicityVector& mult, int i, int j) {
    const int dim = tau_dim(spec);
    if (i < 0 || i >= dim || j < 0 || j >= dim)
        throw std::invalid_argument("tau_entry: index out of range");
    return entry_on(spec, build_multiset(spec, mult), i, j);
}

Rat tau_value(const TauSpec& spec, const MultiplicityVector& mult) {
    const int dim = tau_dim(spec);
    const std::vector<Rat> v = build_multiset(spec, mult);
    SquareMatrix<Rat> M(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) M(i, j) = entry_on(spec, v, i, j);
    return det_exact(M);
}

bool casorati_check(const TauSpec& spec, const MultiplicityVector& mult, int m) {
    if (mult.size() != spec.miwa.size())
        throw std::invalid_argument("casorati_check: multiplicity vector size mismatch");
    if (m < 0 || m >= static_cast<int>(spec.miwa.size()))
        throw std::invalid_argument("casorati_check: variable index out of range");
    if (mult[static_cast<size_t>(m)] < 1)
        throw std::invalid_argument("casorati_check: variable m must be present");
    const Rat& xm = spec.miwa[static_cast<size_t>(m)];
    if (xm.is_zero())
        throw DivisionByZeroVariable("casorati_check: Miwa variable m is zero");
    const int dim = tau_dim(spec);
    const std::vector<Rat> full = build_multiset(spec, mult);
    MultiplicityVector lowered = mult;
    --lowered[static_cast<size_t>(m)];
    const std::vector<Rat> hat = build_multiset(spec, lowered);
    const bool shift_cols = spec.source == TauSource::TAU_IK;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const int si = shift_cols ? i : i + 1;
            const int sj = shift_cols ? j + 1 : j;
            if (si >= dim || sj >= dim) continue; // no next column/row at the edge
            const Rat lhs = entry_on(spec, full, si, sj);
            const Rat rhs = (entry_on(spec, full, i, j) - entry_on(spec, hat, i, j)) / xm;
            if (lhs != rhs) return false;
        }
    // Doubled-variable identity: pick a second variable s with a value
    // distinct from x_m and compare (x_m - x_s) w{+m+s} with the one-sided
    // raises.
    for (size_t s = 0; s < spec.miwa.size(); ++s) {
        if (static_cast<int>(s) == m) continue;
        const Rat& xsv = spec.miwa[s];
        if (xsv == xm) continue;
        MultiplicityVector both = mult, only_m = mult, only_s = mult;
        ++both[static_cast<size_t>(m)];
        ++both[s];
        ++only_m[static_cast<size_t>(m)];
        ++only_s[s];
        const std::vector<Rat> vb = build_multiset(spec, both);
        const std::vector<Rat> vm = build_multiset(spec, only_m);
        const std::vector<Rat> vs = build_multiset(spec, only_s);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const Rat lhs = (xm - xsv) * entry_on(spec, vb, i, j);
                const Rat rhs = xm * entry_on(spec, vm, i, j) - xsv * entry_on(spec, vs, i, j);
                if (lhs != rhs) return false;
            }
        break;
    }
    return true;
}

Rat hirota_miwa_check(const TauSpec& spec, const MultiplicityVector& mult, int i, int j, int k) {
    const int M = static_cast<int>(spec.miwa.size());
    if (i < 0 || j < 0 || k < 0 || i >= M || j >= M || k >= M || i == j || j == k || i == k)
        throw std::invalid_argument("hirota_miwa_check: need three distinct variable indices");
    const Rat xi = spec.miwa[static_cast<size_t>(i)];
    const Rat xj = spec.miwa[static_cast<size_t>(j)];
    const Rat xk = spec.miwa[static_cast<size_t>(k)];
    if (xi.is_zero() || xj.is_zero() || xk.is_zero())
        throw DegenerateMiwaVariables("hirota_miwa_check: zero Miwa variable");
    if (xi == xj || xj == xk || xi == xk)
        throw DegenerateMiwaVariables("hirota_miwa_check: equal Miwa variables");
    auto tau_at = [&](int di, int dj, int dk) {
        MultiplicityVector mm = mult;
        mm[static_cast<size_t>(i)] += di;
        mm[static_cast<size_t>(j)] += dj;
        mm[static_cast<size_t>(k)] += dk;
        return tau_value(spec, mm);
    };
    return xi * (xj - xk) * tau_at(1, 0, 0) * tau_at(0, 1, 1) +
           xj * (xk - xi) * tau_at(0, 1, 0) * tau_at(1, 0, 1) +
           xk * (xi - xj) * tau_at(0, 0, 1) * tau_at(1, 1, 0);
}

Rat kp_bilinear_check(const TauSpec& spec, const MultiplicityVector& mult,
                      const std::vector<int>& subset) {
    const int s = static_cast<int>(subset.size());
    if (s < 3) throw std::invalid_argument("kp_bilinear_check: need >= 3 variables");
    for (size_t a = 0; a < subset.size(); ++a) {
        const int idx = subset[a];
        if (idx < 0 || idx >= static_cast<int>(spec.miwa.size()))
            throw std::invalid_argument("kp_bilinear_check: subset index out of range");
        if (spec.miwa[static_cast<size_t>(idx)].is_zero())
            throw DegenerateMiwaVariables("kp_bilinear_check: zero Miwa variable");
        for (size_t b = a + 1; b < subset.size(); ++b)
            if (spec.miwa[static_cast<size_t>(idx)] ==
                spec.miwa[static_cast<size_t>(subset[b])])
                throw DegenerateMiwaVariables("kp_bilinear_check: equal Miwa variables");
    }
    SquareMatrix<Rat> M(s, Rat(0));
    for (int r = 0; r < s; ++r) {
        const int idx = subset[static_cast<size_t>(r)];
        const Rat& x = spec.miwa[static_cast<size_t>(idx)];
        MultiplicityVector plus = mult, minus = mult;
        ++plus[static_cast<size_t>(idx)];
        for (int o : subset)
            if (o != idx) ++minus[static_cast<size_t>(o)];
        const Rat tp = tau_value(spec, plus);
        const Rat tm = tau_value(spec, minus);
        for (int p = 0; p < s - 1; ++p) M(r, p) = x.pow(p);
        M(r, s - 1) = x.pow(s - 2) * tp * tm;
    }
    return det_exact(M);
}

} // namespace pdwpf
