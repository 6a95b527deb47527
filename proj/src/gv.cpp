#include "pdwpf/gv.hpp"

#include <stdexcept>

#include "pdwpf/det.hpp"
#include "pdwpf/errors.hpp"
#include "pdwpf/matrix.hpp"
#include "pdwpf/poly.hpp"
#include "pdwpf/symfun.hpp"

namespace pdwpf {

namespace {

Rat casorati_sign(int N) { return (N * (N - 1) / 2) % 2 ? Rat(-1) : Rat(1); }

void require_distinct_xs(const std::vector<Rat>& xs) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw DegenerateRapidities("gv: xs must be pairwise distinct");
}

} // namespace

Rat m2_cyclic(const std::vector<Rat>& ys) {
    const size_t N = ys.size();
    if (N == 0) throw std::invalid_argument("m2_cyclic: empty ys");
    Rat s(0);
    for (size_t i = 0; i < N; ++i) s += ys[i] * ys[(i + 1) % N];
    return s;
}

Rat derivative_identity_check(const std::vector<Rat>& ys) {
    const size_t N = ys.size();
    if (N == 0) throw std::invalid_argument("derivative_identity_check: empty ys");
    Rat lhs(0);
    for (size_t i = 0; i < N; ++i) {
        const Rat d = ys[i] - ys[(i + 1) % N];
        lhs += d * d;
    }
    const Rat h1 = complete_h(1, ys);
    const Rat h2 = complete_h(2, ys);
    return lhs - (Rat(4) * h2 - Rat(2) * h1 * h1 - Rat(2) * m2_cyclic(ys));
}

std::pair<Rat, Rat> h2_g2_of_jet(const Jet2& f) {
    const int N = f.vars();
    Rat sii(0), sij(0);
    for (int i = 0; i < N; ++i) sii += f.coeff2(i, i);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) sij += f.coeff2(i, j);
    Rat cyc(0);
    if (N == 1) {
        cyc = Rat(2) * f.coeff2(0, 0);
    } else if (N == 2) {
        cyc = Rat(2) * f.coeff2(0, 1);
    } else {
        for (int i = 0; i < N; ++i) cyc += f.coeff2(i, (i + 1) % N);
    }
    const Rat H2 = sij + Rat(2) * sii;
    const Rat G2 = Rat(2) * sii + Rat(2) * sij + cyc;
    return {H2, G2};
}

Rat gv_map_direct(const std::function<Jet2(const std::vector<Jet2>&)>& f, int N,
                  const Rat& g2) {
    if (N < 1 || N > Jet2::max_vars)
        throw std::invalid_argument("gv_map_direct: variable count out of range");
    std::vector<Jet2> yj;
    yj.reserve(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) yj.push_back(Jet2::variable(N, i));
    const Jet2 jf = f(yj);
    const auto [H2f, G2f] = h2_g2_of_jet(jf);
    return jf.value() + g2 / Rat(2) * (Rat(4) * H2f - Rat(2) * G2f);
}

std::pair<Rat, Rat> h2_g2_action(const std::vector<int>& exponents, int N) {
    if (N < 1) throw std::invalid_argument("h2_g2_action: need N >= 1");
    long degree = 0;
    for (size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] < 0) throw std::invalid_argument("h2_g2_action: negative exponent");
        degree += static_cast<long>(k + 1) * exponents[k];
    }
    if (degree != 2) return {Rat(0), Rat(0)};
    const Rat rn(N);
    if (exponents.size() >= 1 && exponents[0] == 2)
        return {rn * (rn + Rat(1)), Rat(2) * rn * (rn + Rat(1))};
    // the only other degree-2 monomial is h2 itself
    return {rn * (rn + Rat(3)) / Rat(2), rn * (rn + Rat(2))};
}

Rat gv_pdwpf_det(const std::vector<Rat>& xs, int N, const Rat& g2) {
    const int n = static_cast<int>(xs.size());
    if (n < 1 || n > N) throw std::invalid_argument("gv_pdwpf_det: need 1 <= n <= N");
    require_distinct_xs(xs);
    auto col = [&](SquareMatrix<Rat>& M, int slot, int k) {
        for (int i = 0; i < N; ++i) M(i, slot) = coeff_c(i + 1, k, xs, n, N);
    };
    SquareMatrix<Rat> A(N, Rat(0));
    for (int k = 1; k <= N; ++k) col(A, k - 1, k);
    // column linearity in g^2: the cross term of the two shifted columns is
    // the dropped g^4 piece
    Rat linear(0);
    SquareMatrix<Rat> B2 = A;
    col(B2, N - 1, N + 2);
    linear += det_exact(B2);
    if (N >= 2) {
        // with a single column only the c_{1,N+2} shift exists
        SquareMatrix<Rat> B1 = A;
        col(B1, N - 2, N + 1);
        linear += det_exact(B1);
    }
    const Rat detsum = det_exact(A) + g2 * Rat(N) * linear;
    return casorati_sign(N) * detsum / vandermonde(xs, +1);
}

Rat gv_zeta1_direct(const std::vector<Rat>& xs, int N, const Rat& g2) {
    const int n = static_cast<int>(xs.size());
    if (n < 1 || n > N) throw std::invalid_argument("gv_zeta1_direct: need 1 <= n <= N");
    require_distinct_xs(xs);
    const Rat scale = casorati_sign(N) / vandermonde(xs, +1);
    auto f = [&](const std::vector<Jet2>& yj) {
        const Jet2 proto = yj.front().make_zero();
        SquareMatrix<Jet2> M(N, proto);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Jet2 e = proto;
                for (int k = j + 1; k <= N + n; ++k) {
                    const Rat c = coeff_c(i + 1, k, xs, n, N);
                    if (c.is_zero()) continue;
                    e += complete_h_t<Jet2>(k - (j + 1), yj, proto) * proto.make_const(c);
                }
                M(i, j) = e;
            }
        return det_in_ring(M, proto) * proto.make_const(scale);
    };
    return gv_map_direct(f, N, g2);
}

} // namespace pdwpf
