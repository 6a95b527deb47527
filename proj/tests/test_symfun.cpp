#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pdwpf/det.hpp"
#include "pdwpf/korepin.hpp"
#include "pdwpf/matrix.hpp"
#include "pdwpf/poly.hpp"
#include "pdwpf/symfun.hpp"

using namespace pdwpf;

namespace {

const std::vector<Rat> X2 = {Rat(2), Rat(-1)};
const std::vector<Rat> Y3 = {Rat(4), Rat(-3), Rat(1, 2)};

std::vector<Rat> drop(const std::vector<Rat>& v, int m) {
    std::vector<Rat> r = v;
    r.erase(r.begin() + m);
    return r;
}

} // namespace

TEST_CASE("complete and elementary symmetric functions") {
    CHECK(complete_h(0, {}) == Rat(1));
    CHECK(complete_h(3, {}) == Rat(0));
    CHECK(complete_h(-1, X2) == Rat(0));
    CHECK(complete_h(1, X2) == Rat(1));      // 2 + (-1)
    CHECK(complete_h(2, X2) == Rat(3));      // 4 - 2 + 1
    CHECK(elementary_e(0, Y3) == Rat(1));
    CHECK(elementary_e(2, {Rat(2), Rat(-1), Rat(3)}) == Rat(1));
    CHECK(elementary_e(4, Y3) == Rat(0));    // past the variable count
    CHECK(elementary_e(-1, Y3) == Rat(0));
    // dual pairing: sum_k (-1)^k e_k h_{m-k} = 0 for m >= 1
    for (int m = 1; m <= 4; ++m) {
        Rat acc(0);
        for (int k = 0; k <= m; ++k) {
            const Rat t = elementary_e(k, Y3) * complete_h(m - k, Y3);
            acc += (k % 2 == 0) ? t : -t;
        }
        CHECK(acc == Rat(0));
    }
}

TEST_CASE("multiset recursions for the h family") {
    std::mt19937_64 rng(5);
    auto rr = [&rng]() {
        return Rat(static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 3) + 1);
    };
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rat> v;
        const int k = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) v.push_back(rr());
        const int mi = static_cast<int>(rng() % v.size());
        int ni = static_cast<int>(rng() % v.size());
        if (ni == mi) ni = (ni + 1) % static_cast<int>(v.size());
        const Rat xm = v[static_cast<size_t>(mi)];
        const Rat xn = v[static_cast<size_t>(ni)];
        for (int i = 1; i <= 4; ++i) {
            // peeling one variable off
            CHECK(complete_h(i, v) == complete_h(i, drop(v, mi)) + xm * complete_h(i - 1, v));
            // and the two-variable cross-differences that build the Casoratian
            CHECK((xm - xn) * complete_h(i - 1, v) ==
                  complete_h(i, drop(v, ni)) - complete_h(i, drop(v, mi)));
            CHECK((xm - xn) * complete_h(i, v) ==
                  xm * complete_h(i, drop(v, ni)) - xn * complete_h(i, drop(v, mi)));
        }
    }
}

TEST_CASE("discrete derivative lowers the degree by one") {
    const std::vector<Rat> v = {Rat(2), Rat(-1), Rat(1, 2)};
    for (int i = 1; i <= 5; ++i)
        CHECK(discrete_derivative(i, v, 0) == complete_h(i - 1, v));
    CHECK_THROWS_AS(discrete_derivative(2, {Rat(0), Rat(1)}, 0), DivisionByZeroVariable);
    CHECK_THROWS_AS(discrete_derivative(2, v, 7), std::invalid_argument);
}

TEST_CASE("row coefficient table") {
    // n = 2, N = 3 at xs = (2, -1); upper rows drop one pair, lower rows
    // keep the whole pool
    CHECK(coeff_c(1, 1, X2, 2, 3) == Rat(0));
    CHECK(coeff_c(1, 2, X2, 2, 3) == Rat(1));
    CHECK(coeff_c(1, 3, X2, 2, 3) == Rat(1));
    CHECK(coeff_c(2, 1, X2, 2, 3) == Rat(6));
    CHECK(coeff_c(2, 2, X2, 2, 3) == Rat(-5));
    CHECK(coeff_c(2, 3, X2, 2, 3) == Rat(1));
    CHECK(coeff_c(3, 1, X2, 2, 3) == Rat(0));
    CHECK(coeff_c(3, 2, X2, 2, 3) == Rat(6));
    CHECK(coeff_c(3, 3, X2, 2, 3) == Rat(1));
    CHECK(coeff_c(3, 4, X2, 2, 3) == Rat(-4));
    CHECK(coeff_c(3, 5, X2, 2, 3) == Rat(1));
    CHECK_THROWS_AS(coeff_c(0, 1, X2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(coeff_c(1, 1, X2, 1, 3), std::invalid_argument);
}

TEST_CASE("column coefficient table") {
    CHECK(coeff_d(1, 1, Y3, 3) == Rat(-12));
    CHECK(coeff_d(1, 2, Y3, 3) == Rat(-6));
    CHECK(coeff_d(2, 1, Y3, 3) == Rat(0));
    CHECK(coeff_d(2, 2, Y3, 3) == Rat(-1, 2));
    CHECK(coeff_d(3, 2, Y3, 3) == Rat(3, 2));
    CHECK(coeff_d(4, 2, Y3, 3) == Rat(2));
    CHECK_THROWS_AS(coeff_d(1, 1, Y3, 2), std::invalid_argument);
}

TEST_CASE("casoratian determinants, pinned values") {
    const TauSpec ik = make_tau_ik(X2, Y3);
    CHECK(tau_dim(ik) == 3);
    CHECK(tau_value(ik, {0, 0, 0}) == Rat(30));
    CHECK(tau_value(ik, {1, 1, 1}) == Rat(-135));
    CHECK(tau_value(ik, {2, 1, 1}) == Rat(-639));

    const TauSpec s = make_tau_s(X2, Y3);
    CHECK(tau_dim(s) == 2);
    CHECK(tau_value(s, {1, 1}) == Rat(-45));
    CHECK(tau_value(s, {2, 1}) == Rat(-138));
}

TEST_CASE("determinants tie back to the boundary partition function") {
    // the x-side form carries a Vandermonde and a sign relative to the bare
    // Casoratian; the y-side form at unit multiplicities is the value itself
    const TauSpec ik = make_tau_ik(X2, Y3);
    const Rat z = zeta(ZetaVariant::ZETA2, X2, Y3);
    CHECK(tau_value(ik, {1, 1, 1}) == -vandermonde(X2, +1) * z); // (-1)^C(3,2) = -1
    const TauSpec s = make_tau_s(X2, Y3);
    CHECK(tau_value(s, {1, 1}) == z);
}

TEST_CASE("entry generator satisfies the shift conditions") {
    const TauSpec ik = make_tau_ik(X2, Y3);
    CHECK(casorati_check(ik, {1, 1, 1}, 0));
    CHECK(casorati_check(ik, {2, 1, 1}, 1));
    const TauSpec s = make_tau_s(X2, Y3);
    CHECK(casorati_check(s, {1, 1}, 0));
    CHECK(casorati_check(s, {1, 2}, 1));

    CHECK_THROWS_AS(casorati_check(ik, {0, 1, 1}, 0), std::invalid_argument); // m absent
    const TauSpec ik0 = make_tau_ik(X2, {Rat(0), Rat(2), Rat(3)});
    CHECK_THROWS_AS(casorati_check(ik0, {1, 1, 1}, 0), DivisionByZeroVariable);
}

TEST_CASE("three-term bilinear residual vanishes") {
    const TauSpec ik = make_tau_ik(X2, Y3);
    CHECK(hirota_miwa_check(ik, {1, 1, 1}, 0, 1, 2) == Rat(0));
    CHECK(hirota_miwa_check(ik, {2, 1, 2}, 0, 1, 2) == Rat(0));
    CHECK(hirota_miwa_check(ik, {0, 0, 0}, 2, 0, 1) == Rat(0));

    const std::vector<Rat> x3 = {Rat(2), Rat(-1), Rat(1, 3)};
    const std::vector<Rat> y4 = {Rat(4), Rat(-3), Rat(1, 2), Rat(5)};
    const TauSpec s = make_tau_s(x3, y4);
    CHECK(hirota_miwa_check(s, {1, 1, 1}, 0, 1, 2) == Rat(0));
    CHECK(hirota_miwa_check(s, {1, 2, 1}, 0, 1, 2) == Rat(0));
}

TEST_CASE("bilinear residual guards") {
    const TauSpec ik = make_tau_ik(X2, Y3);
    CHECK_THROWS_AS(hirota_miwa_check(ik, {1, 1, 1}, 0, 0, 1), std::invalid_argument);
    const TauSpec zero_var = make_tau_ik(X2, {Rat(0), Rat(2), Rat(3)});
    CHECK_THROWS_AS(hirota_miwa_check(zero_var, {1, 1, 1}, 0, 1, 2), DegenerateMiwaVariables);
    const TauSpec equal_var = make_tau_ik(X2, {Rat(2), Rat(2), Rat(3)});
    CHECK_THROWS_AS(hirota_miwa_check(equal_var, {1, 1, 1}, 0, 1, 2), DegenerateMiwaVariables);
    // total multiplicity is capped to keep the h degrees in range
    CHECK_THROWS_AS(tau_value(ik, {5, 5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(tau_value(ik, {-1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(tau_value(ik, {1, 1}), std::invalid_argument);
}

TEST_CASE("determinant form of the hierarchy on variable subsets") {
    const TauSpec ik = make_tau_ik(X2, Y3);
    CHECK(kp_bilinear_check(ik, {0, 0, 0}, {0, 1, 2}) == Rat(0));
    CHECK(kp_bilinear_check(ik, {1, 0, 1}, {0, 1, 2}) == Rat(0));

    const std::vector<Rat> x3 = {Rat(2), Rat(-1), Rat(1, 3)};
    const std::vector<Rat> y4 = {Rat(4), Rat(-3), Rat(1, 2), Rat(5)};
    const TauSpec ik4 = make_tau_ik(X2, y4);
    CHECK(kp_bilinear_check(ik4, {0, 0, 0, 0}, {0, 1, 2, 3}) == Rat(0));
    const TauSpec s = make_tau_s(x3, y4);
    CHECK(kp_bilinear_check(s, {0, 0, 0}, {0, 1, 2}) == Rat(0));

    CHECK_THROWS_AS(kp_bilinear_check(ik, {0, 0, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(kp_bilinear_check(ik, {0, 0, 0}, {0, 1, 9}), std::invalid_argument);
}

TEST_CASE("a perturbed determinant is not a tau function") {
    // same matrix construction, but one entry of the last column bumped by
    // one; the residual must move away from zero
    const TauSpec ik = make_tau_ik(X2, Y3);
    const std::vector<int> subset = {0, 1, 2};
    const MultiplicityVector base = {0, 0, 0};
    const int sdim = static_cast<int>(subset.size());
    SquareMatrix<Rat> M(sdim, Rat(0));
    for (int r = 0; r < sdim; ++r) {
        const Rat& x = Y3[static_cast<size_t>(subset[static_cast<size_t>(r)])];
        MultiplicityVector plus = base, minus = base;
        ++plus[static_cast<size_t>(subset[static_cast<size_t>(r)])];
        for (int o : subset)
            if (o != subset[static_cast<size_t>(r)]) ++minus[static_cast<size_t>(o)];
        Rat tp = tau_value(ik, plus);
        if (r == 0) tp += Rat(1); // the deliberate damage
        const Rat tm = tau_value(ik, minus);
        for (int p = 0; p < sdim - 1; ++p) M(r, p) = x.pow(p);
        M(r, sdim - 1) = x.pow(sdim - 2) * tp * tm;
    }
    CHECK(det_exact(M) != Rat(0));
}
