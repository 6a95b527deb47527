#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pdwpf/korepin.hpp"
#include "pdwpf/lattice.hpp"

using namespace pdwpf;

namespace {

Rat lattice_value(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    LatticeSpec s;
    s.boundary.family = BoundaryFamily::PDW_TOPSUM;
    s.boundary.n = static_cast<int>(xs.size());
    s.boundary.N = static_cast<int>(ys.size());
    s.weights = WeightScheme::polynomial();
    s.rapidities.xs = xs;
    s.rapidities.ys = ys;
    return oracle_partition_function(s);
}

std::vector<Rat> draw_distinct(std::mt19937_64& rng, int k) {
    std::vector<Rat> v;
    while (static_cast<int>(v.size()) < k) {
        const Rat c(static_cast<long>(rng() % 25) - 12, static_cast<long>(rng() % 3) + 1);
        bool fresh = true;
        for (const Rat& w : v)
            if (w == c) fresh = false;
        if (fresh) v.push_back(c);
    }
    return v;
}

} // namespace

TEST_CASE("both determinant realizations, pinned values") {
    const std::vector<Rat> x2 = {Rat(2), Rat(-1)};
    CHECK(zeta(ZetaVariant::ZETA2, {Rat(5)}, {Rat(0)}) == Rat(1));
    CHECK(zeta(ZetaVariant::ZETA1, {Rat(5)}, {Rat(0)}) == Rat(1));
    CHECK(zeta(ZetaVariant::ZETA2, {Rat(1)}, {Rat(0), Rat(0)}) == Rat(3));
    CHECK(zeta(ZetaVariant::ZETA2, x2, {Rat(0), Rat(0), Rat(0)}) == Rat(10));
    CHECK(zeta(ZetaVariant::ZETA2, x2, {Rat(4), Rat(-3), Rat(1, 2)}) == Rat(-45));
    CHECK(zeta(ZetaVariant::ZETA1, x2, {Rat(4), Rat(-3), Rat(1, 2)}) == Rat(-45));
    CHECK(zeta(ZetaVariant::ZETA2, x2, {Rat(0), Rat(2), Rat(-1, 3)}) == Rat(40, 3));
    CHECK(zeta(ZetaVariant::ZETA1, x2, {Rat(0), Rat(2), Rat(-1, 3)}) == Rat(40, 3));
}

TEST_CASE("the two realizations agree wherever both are defined") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % N);
        for (;;) {
            const std::vector<Rat> xs = draw_distinct(rng, n);
            const std::vector<Rat> ys = draw_distinct(rng, N);
            bool pole = false;
            for (const Rat& x : xs)
                for (const Rat& y : ys)
                    if (x == y || x - y + Rat(1) == Rat(0)) pole = true;
            if (pole) continue;
            CHECK(zeta(ZetaVariant::ZETA1, xs, ys) == zeta(ZetaVariant::ZETA2, xs, ys));
            break;
        }
    }
}

TEST_CASE("determinants equal the polynomial-weight lattice sum") {
    const std::vector<Rat> x2 = {Rat(2), Rat(-1)};
    const std::vector<Rat> y3 = {Rat(4), Rat(-3), Rat(1, 2)};
    CHECK(zeta(ZetaVariant::ZETA2, x2, y3) == lattice_value(x2, y3));
    CHECK(zeta(ZetaVariant::ZETA2, {Rat(1)}, {Rat(0), Rat(0)}) ==
          lattice_value({Rat(1)}, {Rat(0), Rat(0)}));
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 4; ++trial) {
        const std::vector<Rat> xs = draw_distinct(rng, 2);
        std::vector<Rat> ys;
        for (int j = 0; j < 4; ++j)
            ys.push_back(Rat(static_cast<long>(rng() % 9) - 4));
        CHECK(zeta(ZetaVariant::ZETA2, xs, ys) == lattice_value(xs, ys));
    }
}

TEST_CASE("the Cauchy-block realization needs nondegenerate input") {
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA1, {Rat(1)}, {Rat(0), Rat(0)}), DegenerateRapidities);
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA1, {Rat(1), Rat(1)}, {Rat(0), Rat(2)}),
                    DegenerateRapidities);
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA1, {Rat(2)}, {Rat(2), Rat(0)}), DegenerateRapidities);
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA1, {Rat(2)}, {Rat(3), Rat(0)}), DegenerateRapidities);
    // the power-row realization shrugs at coinciding ys
    CHECK_NOTHROW(zeta(ZetaVariant::ZETA2, {Rat(1)}, {Rat(0), Rat(0)}));
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA2, {Rat(1), Rat(1)}, {Rat(0), Rat(2)}),
                    DegenerateRapidities);
    CHECK_THROWS_AS(zeta(ZetaVariant::ZETA2, {}, {Rat(0)}), std::invalid_argument);
}

TEST_CASE("degree in the last row rapidity stays below 2N") {
    const std::vector<Rat> y3 = {Rat(4), Rat(-3), Rat(1, 2)};
    for (const ZetaVariant v : {ZetaVariant::ZETA1, ZetaVariant::ZETA2}) {
        const DegreeReport one = check_property_A(v, {}, y3);
        CHECK(one.pass);
        CHECK(one.degree <= 2 * 3 - 1);
        const DegreeReport two = check_property_A(v, {Rat(2)}, y3);
        CHECK(two.pass);
    }
    // constant in x happens at N = 1 sized problems shrunk to nothing: a
    // plain smoke check that degree 0 data passes too
    const DegreeReport small = check_property_A(ZetaVariant::ZETA2, {}, {Rat(0)});
    CHECK(small.pass);
}

TEST_CASE("symmetry under column permutations") {
    const std::vector<Rat> x2 = {Rat(2), Rat(-1)};
    const std::vector<Rat> y3 = {Rat(4), Rat(-3), Rat(1, 2)};
    CHECK(check_property_B(ZetaVariant::ZETA2, x2, y3, {2, 0, 1}));
    CHECK(check_property_B(ZetaVariant::ZETA1, x2, y3, {1, 2, 0}));
    CHECK_THROWS_AS(check_property_B(ZetaVariant::ZETA2, x2, y3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_property_B(ZetaVariant::ZETA2, x2, y3, {0, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("two-term recursions at the substitution points") {
    const std::vector<Rat> x2 = {Rat(2), Rat(-1)};
    const std::vector<Rat> y2 = {Rat(4), Rat(-3)};
    const std::vector<Rat> y3 = {Rat(4), Rat(-3), Rat(1, 2)};
    CHECK(check_property_C(ZetaVariant::ZETA2, x2, y2));
    CHECK(check_property_C(ZetaVariant::ZETA2, x2, y3));
    CHECK(check_property_C(ZetaVariant::ZETA1, x2, y2));
    CHECK(check_property_C(ZetaVariant::ZETA1, x2, y3));
    CHECK_THROWS_AS(check_property_C(ZetaVariant::ZETA2, {Rat(2)}, y2), std::invalid_argument);
}

TEST_CASE("one-row initial condition") {
    CHECK(check_property_D({Rat(0)}));
    CHECK(check_property_D({Rat(4), Rat(-3)}));
    CHECK(check_property_D({Rat(4), Rat(-3), Rat(1, 2)}));
    CHECK(check_property_D({Rat(0), Rat(0), Rat(0)})); // coinciding columns allowed
    CHECK_THROWS_AS(check_property_D({}), std::invalid_argument);
}
