#include "pdwpf/limits.hpp"

#include <stdexcept>

#include "pdwpf/determinants.hpp"

namespace pdwpf {

namespace {

std::vector<LaurentRat> lift(const std::vector<Rat>& v, int window) {
    std::vector<LaurentRat> out;
    out.reserve(v.size());
    for (const Rat& r : v) out.push_back(LaurentRat::constant(r, window));
    return out;
}

std::vector<LaurentRat2> lift2(const std::vector<Rat>& v, int window) {
    std::vector<LaurentRat2> out;
    out.reserve(v.size());
    for (const Rat& r : v)
        out.push_back(LaurentRat2::constant(LaurentRat::constant(r, window), window));
    return out;
}

} // namespace

LimitReport limit_check_one(const std::vector<Rat>& xs_head, const std::vector<Rat>& ys,
                            int window) {
    const int N = static_cast<int>(ys.size());
    if (static_cast<int>(xs_head.size()) != N - 1 || N < 2)
        throw std::invalid_argument("limit_check_one: need |xs_head| = N - 1, N >= 2");
    LimitReport rep;
    rep.expected = pdwpf_hybrid(xs_head, ys);

    std::vector<LaurentRat> xs = lift(xs_head, window);
    xs.push_back(LaurentRat::variable(Rat(0), -1, window));
    const LaurentRat proto(Rat(0), window);
    const LaurentRat Z = cores::izergin_rational(xs, lift(ys, window), proto);
    rep.extracted = Z.coefficient(1);
    rep.pass = rep.extracted == rep.expected;
    return rep;
}

LimitReport limit_check_many(const std::vector<Rat>& xs_head, const std::vector<Rat>& ys,
                             int window) {
    const int N = static_cast<int>(ys.size());
    if (static_cast<int>(xs_head.size()) != N - 2 || N < 3)
        throw std::invalid_argument("limit_check_many: need |xs_head| = N - 2 >= 1");
    LimitReport rep;
    rep.expected = pdwpf_hybrid(xs_head, ys);

    const LaurentRat inner_proto(Rat(0), window);
    std::vector<LaurentRat2> xs = lift2(xs_head, window);
    // x_{N-1} = 1/delta lives inside the coefficients, x_N = 1/eps outside.
    xs.push_back(LaurentRat2::constant(LaurentRat::variable(Rat(0), -1, window), window));
    xs.push_back(LaurentRat2::variable(inner_proto, -1, window));
    const LaurentRat2 proto(inner_proto, window);
    const LaurentRat2 Z = cores::izergin_rational(xs, lift2(ys, window), proto);
    rep.extracted = Z.coefficient(1).coefficient(1) / Rat(2);
    rep.pass = rep.extracted == rep.expected;
    return rep;
}

LimitReport limit_check_trig(const std::vector<Rat>& exs_head, const std::vector<Rat>& eys,
                             const Rat& eg, int window) {
    const int N = static_cast<int>(eys.size());
    if (static_cast<int>(exs_head.size()) != N - 1 || N < 2)
        throw std::invalid_argument("limit_check_trig: need |exs_head| = N - 1, N >= 2");
    LimitReport rep;
    rep.expected = pdwpf_trig_hybrid(exs_head, eys, eg);

    std::vector<LaurentRat> Xs = lift(exs_head, window);
    Xs.push_back(LaurentRat::variable(Rat(0), -1, window));
    const LaurentRat proto(Rat(0), window);
    const LaurentRat Z =
        cores::izergin_trig(Xs, lift(eys, window), LaurentRat::constant(eg, window), proto);
    const Rat q = (eg * eg).inv();
    rep.extracted = Z.coefficient(0) / (Rat(1) - q);
    rep.pass = rep.extracted == rep.expected;
    return rep;
}

LimitReport limit_check_slavnov(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                int n_roots, int window) {
    if (n_roots != 1 && n_roots != 2)
        throw std::invalid_argument("limit_check_slavnov: n_roots must be 1 or 2");
    if (static_cast<int>(xs.size()) != n_roots)
        throw std::invalid_argument("limit_check_slavnov: need |xs| = n_roots");
    LimitReport rep;
    rep.expected = factorial_rat(n_roots) * pdwpf_kostov(xs, ys);

    if (n_roots == 1) {
        const LaurentRat proto(Rat(0), window);
        std::vector<LaurentRat> bs{LaurentRat::variable(Rat(0), -1, window)};
        const LaurentRat S =
            cores::slavnov_rational(lift(xs, window), bs, lift(ys, window), proto);
        rep.extracted = S.coefficient(1);
    } else {
        const LaurentRat inner_proto(Rat(0), window);
        const LaurentRat2 proto(inner_proto, window);
        std::vector<LaurentRat2> bs{
            LaurentRat2::variable(inner_proto, -1, window),
            LaurentRat2::constant(LaurentRat::variable(Rat(0), -1, window), window)};
        const LaurentRat2 S = cores::slavnov_rational(lift2(xs, window), bs,
                                                      lift2(ys, window), proto);
        rep.extracted = S.coefficient(1).coefficient(1);
    }
    rep.pass = rep.extracted == rep.expected;
    return rep;
}

} // namespace pdwpf
