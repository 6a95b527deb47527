#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pdwpf/determinants.hpp"
#include "pdwpf/lattice.hpp"
#include "pdwpf/limits.hpp"
#include "pdwpf/numeric.hpp"

using namespace pdwpf;

namespace {

const std::vector<Rat> X23 = {Rat(2), Rat(-1)};
const std::vector<Rat> Y23 = {Rat(4), Rat(-3), Rat(1, 2)};

Rat oracle_pf(BoundaryFamily fam, const WeightScheme& w, const std::vector<Rat>& xs,
              const std::vector<Rat>& ys, int m = 0, const std::vector<Rat>& bs = {}) {
    LatticeSpec s;
    s.boundary.family = fam;
    s.boundary.n = static_cast<int>(xs.size());
    s.boundary.N = static_cast<int>(ys.size());
    s.boundary.m = m;
    s.weights = w;
    s.rapidities.xs = xs;
    s.rapidities.ys = ys;
    s.rapidities.bs = bs;
    return oracle_partition_function(s);
}

// small random rationals, re-drawn until the denominators of the rational
// weight scheme stay away from zero
std::vector<std::vector<Rat>> draw_xy(std::mt19937_64& rng, int n, int N) {
    auto rr = [&rng]() {
        return Rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 3) + 1);
    };
    for (;;) {
        std::vector<Rat> xs, ys;
        for (int i = 0; i < n; ++i) xs.push_back(rr());
        for (int j = 0; j < N; ++j) ys.push_back(rr());
        bool ok = true;
        for (size_t i = 0; i < xs.size() && ok; ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                if (xs[i] == xs[j]) { ok = false; break; }
        for (size_t i = 0; i < ys.size() && ok; ++i)
            for (size_t j = i + 1; j < ys.size(); ++j)
                if (ys[i] == ys[j]) { ok = false; break; }
        for (const Rat& x : xs)
            for (const Rat& y : ys)
                if (x == y || x - y + Rat(1) == Rat(0)) { ok = false; }
        if (ok) return {xs, ys};
    }
}

} // namespace

TEST_CASE("domain-wall determinant equals the walk, rational scheme") {
    CHECK(izergin_dwpf({Rat(2)}, {Rat(0)}, WeightScheme::rational()) == Rat(1, 3));
    CHECK(izergin_dwpf(X23, {Rat(4), Rat(-3)}, WeightScheme::rational()) == Rat(-7, 18));

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        const auto d = draw_xy(rng, 3, 3);
        CHECK(izergin_dwpf(d[0], d[1], WeightScheme::rational()) ==
              oracle_pf(BoundaryFamily::DWBC, WeightScheme::rational(), d[0], d[1]));
    }
}

TEST_CASE("domain-wall determinant equals the walk, trigonometric scheme") {
    const WeightScheme trig = WeightScheme::trigonometric(Rat(2));
    CHECK(izergin_dwpf({Rat(3), Rat(7)}, {Rat(2), Rat(5)}, trig) == Rat(11907, 13376));
    CHECK(izergin_dwpf({Rat(3), Rat(7)}, {Rat(2), Rat(5)}, trig) ==
          oracle_pf(BoundaryFamily::DWBC, trig, {Rat(3), Rat(7)}, {Rat(2), Rat(5)}));
}

TEST_CASE("polynomial scheme clears one a-weight denominator per vertex") {
    const std::vector<Rat> ys = {Rat(4), Rat(-3)};
    Rat factor(1);
    for (const Rat& x : X23)
        for (const Rat& y : ys) factor *= x - y + Rat(1);
    CHECK(izergin_dwpf(X23, ys, WeightScheme::rational()) * factor ==
          oracle_pf(BoundaryFamily::DWBC, WeightScheme::polynomial(), X23, ys));
    CHECK(oracle_pf(BoundaryFamily::DWBC, WeightScheme::polynomial(), X23, ys) == Rat(-28));
    // and the determinant route has no polynomial form at all
    CHECK_THROWS_AS(izergin_dwpf(X23, ys, WeightScheme::polynomial()), std::invalid_argument);
}

TEST_CASE("domain-wall determinant input guards") {
    const WeightScheme w = WeightScheme::rational();
    CHECK_THROWS_AS(izergin_dwpf({}, {}, w), std::invalid_argument);
    CHECK_THROWS_AS(izergin_dwpf({Rat(1)}, {Rat(0), Rat(2)}, w), std::invalid_argument);
    CHECK_THROWS_AS(izergin_dwpf({Rat(1), Rat(1)}, {Rat(0), Rat(2)}, w), DegenerateRapidities);
    CHECK_THROWS_AS(izergin_dwpf({Rat(1), Rat(2)}, {Rat(1), Rat(5)}, w), SingularWeight);
    CHECK_THROWS_AS(izergin_dwpf({Rat(1), Rat(2)}, {Rat(2), Rat(5)}, w), SingularWeight);
    const WeightScheme trig = WeightScheme::trigonometric(Rat(2));
    CHECK_THROWS_AS(izergin_dwpf({Rat(3), Rat(-3)}, {Rat(2), Rat(5)}, trig), DegenerateRapidities);
    CHECK_THROWS_AS(izergin_dwpf({Rat(1)}, {Rat(2)}, trig), SingularWeight); // X G = Y
}

TEST_CASE("partial function: three determinant forms, one lattice value") {
    CHECK(pdwpf_hybrid(X23, Y23) == Rat(1, 2));
    CHECK(pdwpf_hybrid(X23, Y23, true) == Rat(1, 2)); // h-row variant, same value
    CHECK(pdwpf_kostov(X23, Y23) == Rat(1, 2));
    CHECK(pdwpf_partition_sum(X23, Y23) == Rat(1, 2));
    CHECK(oracle_pf(BoundaryFamily::PDW_TOPSUM, WeightScheme::rational(), X23, Y23) == Rat(1, 2));

    // full-boundary degeneration: n = N reduces to the domain wall
    CHECK(pdwpf_kostov({Rat(2)}, {Rat(0)}) == Rat(1, 3));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 4; ++trial) {
        const auto d = draw_xy(rng, 2, 4);
        const Rat want = oracle_pf(BoundaryFamily::PDW_TOPSUM, WeightScheme::rational(), d[0], d[1]);
        CHECK(pdwpf_hybrid(d[0], d[1]) == want);
        CHECK(pdwpf_hybrid(d[0], d[1], true) == want);
        CHECK(pdwpf_kostov(d[0], d[1]) == want);
        CHECK(pdwpf_partition_sum(d[0], d[1]) == want);
    }
}

TEST_CASE("kostov and splitting-sum forms survive coinciding column rapidities") {
    // the N x N hybrid needs distinct ys, these two do not
    const std::vector<Rat> ys = {Rat(0), Rat(0), Rat(3)};
    const Rat want = oracle_pf(BoundaryFamily::PDW_TOPSUM, WeightScheme::rational(), X23, ys);
    CHECK(pdwpf_kostov(X23, ys) == want);
    CHECK(pdwpf_partition_sum(X23, ys) == want);
}

TEST_CASE("trigonometric partial functions match their own lattices") {
    const Rat eg(2);
    const std::vector<Rat> exs = {Rat(3)};
    const std::vector<Rat> eys = {Rat(2), Rat(5)};
    const WeightScheme trig = WeightScheme::trigonometric(eg);
    CHECK(pdwpf_trig_hybrid(exs, eys, eg) == Rat(27, 22));
    CHECK(pdwpf_trig_hybrid(exs, eys, eg) ==
          oracle_pf(BoundaryFamily::PDW_TOPSUM, trig, exs, eys));
    CHECK(pdwpf_trig_kostov(exs, eys, eg) == Rat(51, 11));
    CHECK(pdwpf_trig_kostov(exs, eys, eg) ==
          oracle_pf(BoundaryFamily::PDW_Z2, trig, exs, eys));
    // the two trigonometric values describe different boundaries and differ
    CHECK(pdwpf_trig_hybrid(exs, eys, eg) != pdwpf_trig_kostov(exs, eys, eg));
}

TEST_CASE("splitting the summed boundary only rescales by a binomial") {
    const std::vector<Rat> xs = {Rat(1, 3)};
    const Rat top = oracle_pf(BoundaryFamily::PDW_TOPSUM, WeightScheme::rational(), xs, Y23);
    CHECK(top == Rat(63, 52));
    CHECK(oracle_pf(BoundaryFamily::PDW_SPLIT, WeightScheme::rational(), xs, Y23, 2) ==
          binomial_rat(2, 1) * top);
    CHECK(oracle_pf(BoundaryFamily::PDW_SPLIT, WeightScheme::rational(), xs, Y23, 1) ==
          binomial_rat(2, 2) * top);
    CHECK(oracle_pf(BoundaryFamily::PDW_SPLIT, WeightScheme::rational(), xs, Y23, 3) ==
          binomial_rat(2, 0) * top);
}

TEST_CASE("root-system residuals, exact") {
    // n = 1 closes in radicals: b = (y1 + y2 - 1)/2
    const std::vector<Rat> ys = {Rat(2), Rat(-1, 3)};
    const std::vector<Rat> root = {Rat(1, 3)};
    const auto res = bethe_check(root, ys, WeightScheme::rational());
    REQUIRE(res.size() == 1);
    CHECK(res[0].is_zero());
    const auto bad = bethe_check({Rat(5)}, ys, WeightScheme::rational());
    CHECK(!bad[0].is_zero());
    CHECK_THROWS_AS(bethe_check({Rat(2)}, ys, WeightScheme::rational()), PoleAtCandidate);
}

TEST_CASE("scalar product determinant at exact root pairs") {
    CHECK(slavnov_scalar_product({Rat(7, 3)}, {Rat(-1, 2)}, {Rat(0), Rat(0)}) == Rat(-9, 50));
    CHECK(slavnov_scalar_product({Rat(5)}, {Rat(1, 3)}, {Rat(2), Rat(-1, 3)}) == Rat(-3, 38));
    CHECK(slavnov_scalar_product({Rat(13, 5)}, {Rat(-3, 2)},
                                 {Rat(1), Rat(4), Rat(-69, 28)}) == Rat(2150, 11037));
    CHECK(slavnov_scalar_product({Rat(-5, 3)}, {Rat(2, 7)},
                                 {Rat(-1), Rat(3), Rat(6), Rat(-86, 7)}) == Rat(25263, 13420));
    // each equals the brute-force double-block lattice
    CHECK(oracle_pf(BoundaryFamily::SCALAR_PRODUCT, WeightScheme::rational(), {Rat(7, 3)},
                    {Rat(0), Rat(0)}, 0, {Rat(-1, 2)}) == Rat(-9, 50));
    CHECK_THROWS_AS(slavnov_scalar_product({Rat(7, 3)}, {Rat(1, 5)}, {Rat(0), Rat(0)}),
                    NotBetheRoots);
}

TEST_CASE("scalar product determinant, trigonometric parametrization") {
    // e^b = 1 solves the multiplicative root system for these columns
    const Rat eg(2);
    CHECK(slavnov_scalar_product_trig({Rat(7, 2)}, {Rat(1)}, {Rat(5), Rat(10, 11)}, eg) ==
          Rat(-3125, 15544));
    CHECK(oracle_pf(BoundaryFamily::SCALAR_PRODUCT, WeightScheme::trigonometric(eg), {Rat(7, 2)},
                    {Rat(5), Rat(10, 11)}, 0, {Rat(1)}) == Rat(-3125, 15544));
}

TEST_CASE("infinite-rapidity degenerations") {
    const LimitReport one = limit_check_one({Rat(2)}, {Rat(4), Rat(-3)});
    CHECK(one.pass);
    CHECK(one.expected == Rat(-2, 3));
    CHECK(one.extracted == Rat(-2, 3));

    const LimitReport many = limit_check_many({Rat(1, 3)}, Y23);
    CHECK(many.pass);
    CHECK(many.expected == Rat(63, 52));

    const LimitReport trig = limit_check_trig({Rat(3)}, {Rat(2), Rat(5)}, Rat(2));
    CHECK(trig.pass);
    CHECK(trig.expected == Rat(27, 22));

    const LimitReport slav1 = limit_check_slavnov({Rat(7, 3)}, {Rat(0), Rat(5)}, 1);
    CHECK(slav1.pass);
    const LimitReport slav2 = limit_check_slavnov({Rat(7, 3), Rat(1, 2)}, {Rat(0), Rat(5), Rat(-2)}, 2);
    CHECK(slav2.pass);

    CHECK_THROWS_AS(limit_check_one({Rat(1)}, {Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(limit_check_slavnov({Rat(1)}, {Rat(0)}, 3), std::invalid_argument);
}

TEST_CASE("float route stays glued to the exact one") {
    // same determinant bodies over 100-digit complex floats
    std::vector<CFloat> xf;
    for (const Rat& x : X23) xf.push_back(to_cfloat(x));
    const CFloat kf = pdwpf_kostov_numeric(xf, Y23);
    CHECK(magnitude(kf - to_cfloat(Rat(1, 2))) < RFloat("1e-80"));

    std::vector<CFloat> bf = {to_cfloat(Rat(-1, 2))};
    const CFloat sf = oracle_scalar_product_numeric({Rat(7, 3)}, bf, {Rat(0), Rat(0)});
    CHECK(magnitude(sf - to_cfloat(Rat(-9, 50))) < RFloat("1e-80"));
    CHECK(magnitude(slavnov_numeric({Rat(7, 3)}, bf, {Rat(0), Rat(0)}) - sf) < RFloat("1e-80"));
}

TEST_CASE("numeric root solving: residuals, scalar product, vanishing") {
    const std::vector<Rat> ys = {Rat(0), Rat(0), Rat(0), Rat(0)};
    const auto roots = bethe_solve_numeric(2, ys, WeightScheme::rational(), 12345);
    REQUIRE(roots.size() == 2);
    // known pair: -1/2 +- i/(2 sqrt 3)
    const RFloat half("0.5");
    for (const auto& r : roots) {
        CHECK(boost::multiprecision::abs(r.real() + half) < RFloat("1e-60"));
        CHECK(boost::multiprecision::abs(boost::multiprecision::abs(r.imag()) -
                                         RFloat(1) / (2 * sqrt(RFloat(3)))) < RFloat("1e-60"));
    }
    for (const auto& res : bethe_residuals_numeric(roots, ys, WeightScheme::rational()))
        CHECK(magnitude(res) < RFloat("1e-12"));

    const std::vector<Rat> xs = {Rat(3), Rat(9, 2)};
    const CFloat det_form = slavnov_numeric(xs, roots, ys);
    const CFloat lattice = oracle_scalar_product_numeric(xs, roots, ys);
    CHECK(magnitude(det_form - lattice) / magnitude(lattice) < RFloat("1e-9"));

    // on-shell rows annihilate the n x n partial-function determinant
    CHECK(magnitude(pdwpf_kostov_numeric(roots, ys)) < RFloat("1e-9"));
}
