#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pdwpf/errors.hpp"
#include "pdwpf/gv.hpp"
#include "pdwpf/jet2.hpp"
#include "pdwpf/korepin.hpp"
#include "pdwpf/symfun.hpp"

using namespace pdwpf;

namespace {

// prod_k h_k^(expo[k-1]) evaluated in the jet ring, so its value, gradient
// and Hessian at the origin come out together.
Jet2 h_monomial(const std::vector<int>& expo, const std::vector<Jet2>& yj) {
    const Jet2 proto = yj.front().make_zero();
    Jet2 out = proto.make_one();
    for (size_t k = 0; k < expo.size(); ++k) {
        const Jet2 hk = complete_h_t<Jet2>(static_cast<int>(k) + 1, yj, proto);
        for (int e = 0; e < expo[k]; ++e) out = out * hk;
    }
    return out;
}

std::vector<Jet2> origin_jets(int N) {
    std::vector<Jet2> yj;
    for (int i = 0; i < N; ++i) yj.push_back(Jet2::variable(N, i));
    return yj;
}

} // namespace

TEST_CASE("cyclic quadratic and the derivative identity") {
    CHECK(m2_cyclic({Rat(3)}) == Rat(9));                   // wraps to y^2
    CHECK(m2_cyclic({Rat(2), Rat(5)}) == Rat(20));          // both directions
    CHECK(m2_cyclic({Rat(1), Rat(2), Rat(3)}) == Rat(11));
    CHECK_THROWS_AS(m2_cyclic({}), std::invalid_argument);
    CHECK_THROWS_AS(derivative_identity_check({}), std::invalid_argument);

    std::mt19937_64 rng(31);
    auto rr = [&rng]() {
        return Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> ys;
        const int N = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < N; ++i) ys.push_back(rr());
        CHECK(derivative_identity_check(ys) == Rat(0));
    }
}

TEST_CASE("closed-form quadratic action values") {
    // h_1^2 row of the table at a few N
    CHECK(h2_g2_action({2}, 1) == std::pair<Rat, Rat>(Rat(2), Rat(4)));
    CHECK(h2_g2_action({2}, 3) == std::pair<Rat, Rat>(Rat(12), Rat(24)));
    CHECK(h2_g2_action({2, 0}, 5) == std::pair<Rat, Rat>(Rat(30), Rat(60)));
    // h_2 row, meaningful for N >= 2
    CHECK(h2_g2_action({0, 1}, 2) == std::pair<Rat, Rat>(Rat(5), Rat(8)));
    CHECK(h2_g2_action({0, 1}, 4) == std::pair<Rat, Rat>(Rat(14), Rat(24)));
    // anything off degree 2 is annihilated
    CHECK(h2_g2_action({1}, 3) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
    CHECK(h2_g2_action({1, 1}, 3) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
    CHECK(h2_g2_action({0, 0, 1}, 4) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
    CHECK(h2_g2_action({4}, 2) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
    CHECK(h2_g2_action({}, 3) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
    CHECK_THROWS_AS(h2_g2_action({-1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(h2_g2_action({2}, 0), std::invalid_argument);
}

TEST_CASE("jet differentiation reproduces the table") {
    const std::vector<std::vector<int>> degree_two = {{2}, {0, 1}};
    const std::vector<std::vector<int>> off_degree = {{1}, {3}, {1, 1}, {0, 0, 1}, {0, 2}, {1, 0, 1}};
    for (int N = 1; N <= 5; ++N) {
        const auto yj = origin_jets(N);
        for (const auto& vec : degree_two) {
            // the single variable at N = 1 identifies h_2 with h_1^2, so the
            // independent-h table entry does not apply there
            if (N == 1 && vec == std::vector<int>{0, 1}) continue;
            const auto jet_pair = h2_g2_of_jet(h_monomial(vec, yj));
            CHECK(jet_pair == h2_g2_action(vec, N));
        }
        for (const auto& vec : off_degree) {
            CHECK(h2_g2_of_jet(h_monomial(vec, yj)) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
            CHECK(h2_g2_action(vec, N) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
        }
    }
    // the degenerate point, spelled out: both readings exist, they differ in
    // the second slot only
    const auto jet_h2_n1 = h2_g2_of_jet(h_monomial({0, 1}, origin_jets(1)));
    CHECK(jet_h2_n1 == std::pair<Rat, Rat>(Rat(2), Rat(4)));
    CHECK(h2_g2_action({0, 1}, 1) == std::pair<Rat, Rat>(Rat(2), Rat(3)));
}

TEST_CASE("mapping a function through one jet evaluation") {
    // constants pass through untouched
    auto cf = [](const std::vector<Jet2>& yj) { return yj.front().make_const(Rat(5)); };
    CHECK(gv_map_direct(cf, 4, Rat(1, 3)) == Rat(5));
    // h_2 at N = 3: value 0, corrected by g^2/2 (4*9 - 2*15) = 3 g^2
    auto h2f = [](const std::vector<Jet2>& yj) {
        return complete_h_t<Jet2>(2, yj, yj.front().make_zero());
    };
    CHECK(gv_map_direct(h2f, 3, Rat(1, 7)) == Rat(3, 7));
    CHECK(gv_map_direct(h2f, 3, Rat(0)) == Rat(0));
    CHECK_THROWS_AS(gv_map_direct(h2f, 0, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(gv_map_direct(h2f, 17, Rat(1)), std::invalid_argument);
}

TEST_CASE("one-loop determinant pins and the direct route") {
    const std::vector<Rat> X2 = {Rat(2), Rat(-1)};
    CHECK(gv_pdwpf_det(X2, 3, Rat(1, 7)) == Rat(40, 7));
    CHECK(gv_pdwpf_det({Rat(3)}, 2, Rat(1, 7)) == Rat(7));
    // at g^2 = 0 only the bare column set survives and the value is the
    // partial function at vanishing second family
    CHECK(gv_pdwpf_det(X2, 3, Rat(0)) == Rat(10));
    CHECK(zeta(ZetaVariant::ZETA2, X2, {Rat(0), Rat(0), Rat(0)}) == Rat(10));

    CHECK(gv_zeta1_direct(X2, 3, Rat(1, 7)) == Rat(40, 7));
    CHECK(gv_zeta1_direct({Rat(3)}, 2, Rat(1, 7)) == Rat(7));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        const int N = 2 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % N);
        std::vector<Rat> xs;
        while (static_cast<int>(xs.size()) < n) {
            Rat c(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 3) + 1);
            bool fresh = true;
            for (const auto& x : xs)
                if (x == c) fresh = false;
            if (fresh) xs.push_back(c);
        }
        const Rat g2(static_cast<long>(rng() % 9) - 4, 5);
        CHECK(gv_pdwpf_det(xs, N, g2) == gv_zeta1_direct(xs, N, g2));
    }
}

TEST_CASE("determinant input guards") {
    CHECK_THROWS_AS(gv_pdwpf_det({Rat(1), Rat(1)}, 3, Rat(1)), DegenerateRapidities);
    CHECK_THROWS_AS(gv_zeta1_direct({Rat(1), Rat(1)}, 3, Rat(1)), DegenerateRapidities);
    CHECK_THROWS_AS(gv_pdwpf_det({Rat(1), Rat(2), Rat(3)}, 2, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(gv_pdwpf_det({}, 2, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(gv_zeta1_direct({}, 2, Rat(1)), std::invalid_argument);
}
