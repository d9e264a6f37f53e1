#include <random>

#include "doctest.h"
#include "tropimpl/error.hpp"
#include "tropimpl/intersection.hpp"
#include "tropimpl/laurent.hpp"

using namespace tropimpl;

namespace {

LaurentPoly lp(std::initializer_list<std::tuple<long, long, long>> terms) {
    BiPoly p;
    for (auto [c, a, b] : terms) p.add_term({a, b}, Rational(c));
    return LaurentPoly(p);
}

BiPoly xy(std::initializer_list<std::tuple<long, long, long>> terms) { return lp(terms); }

HomPoly hom(const BiPoly& f) { return homogenize(LaurentPoly(f)); }

// Oracle: G restricted to the graph y = h(x), as a univariate polynomial.
UPoly restrict_to_graph(const BiPoly& g, const UPoly& h) {
    UPoly acc;
    for (const auto& [e, c] : g.terms()) {
        UPoly t = UPoly::constant(c) * UPoly::monomial(1, e[0]);
        for (long k = 0; k < e[1]; ++k) t = t * h;
        acc += t;
    }
    return acc;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("newton polygon examples") {
    CHECK(newton_polygon(lp({{3, 0, 0}})).dim == 0);
    auto tri = newton_polygon(lp({{7, 1, 1}, {11, 1, 0}, {13, 0, 1}}));
    CHECK(tri.dim == 2);
    CHECK(tri.vertices.size() == 3);
    auto seg = newton_polygon(lp({{1, 0, 0}, {1, 2, 0}}));
    CHECK(seg.dim == 1);
    CHECK(seg.vertices == std::vector<IntVector>{IntVector{0, 0}, IntVector{2, 0}});
    CHECK_THROWS_AS(newton_polygon(LaurentPoly()), Error);
}

TEST_CASE("tropical evaluation") {
    CHECK(trop_eval(lp({{1, 0, 0}, {1, 1, 0}}), IntVector{1, 0}) == 0);
    CHECK(trop_eval(lp({{2, 2, 0}, {3, 3, 0}, {5, 0, 2}}), IntVector{-1, -1}) == -3);
    CHECK(trop_eval(lp({{1, 2, -1}}), IntVector{5, 7}) == 3);
    CHECK_THROWS_AS(trop_eval(LaurentPoly(), IntVector{1, 1}), Error);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> e(-3, 3), c(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        BiPoly f, g;
        for (int i = 0; i < 3; ++i) f.add_term({e(rng), e(rng)}, c(rng));
        for (int i = 0; i < 3; ++i) g.add_term({e(rng), e(rng)}, c(rng));
        IntVector w{e(rng), e(rng)};
        CHECK(trop_eval(LaurentPoly(f * g), w) == trop_eval(LaurentPoly(f), w) + trop_eval(LaurentPoly(g), w));
    }
}

TEST_CASE("homogenization") {
    HomPoly h1 = homogenize(lp({{-1, 0, 0}, {-1, 1, 0}, {1, 0, 1}}));
    CHECK(h1.degree() == 1);
    CHECK(h1.poly().coeff({0, 0, 1}) == -1);
    CHECK(h1.poly().coeff({1, 0, 0}) == -1);
    CHECK(h1.poly().coeff({0, 1, 0}) == 1);
    HomPoly h3 = homogenize(lp({{2, 0, 0}, {-1, 1, 1}}));
    CHECK(h3.degree() == 2);
    CHECK(h3.poly().coeff({0, 0, 2}) == 2);
    CHECK(h3.poly().coeff({1, 1, 0}) == -1);
    CHECK(homogenize(lp({{1, 1, 0}})).degree() == 1);
    CHECK(h3.dehomogenize(2) == BiPoly(lp({{2, 0, 0}, {-1, 1, 1}})));
    CHECK_THROWS_AS(homogenize(lp({{1, -1, 0}})), Error);
}

TEST_CASE("resultant examples") {
    BiPoly f = xy({{1, 0, 1}, {-1, 2, 0}}), g = xy({{1, 0, 1}});
    CHECK(resultant(f, g, 1) == UPoly({0, 0, -1}));
    CHECK(resultant(g, f, 1) == UPoly({0, 0, 1}));
    CHECK(resultant(xy({{1, 0, 1}, {-1, 0, 0}}), xy({{1, 0, 1}, {1, 0, 0}}), 1) == UPoly::constant(-2));
    CHECK(resultant(f, f, 1).is_zero());
    CHECK_THROWS_AS(resultant(xy({{1, 1, 0}}), xy({{2, 3, 0}}), 1), Error);
}

TEST_CASE("multiplicity at points") {
    HomPoly f = hom(xy({{4, 1, 1}, {-1, 3, 0}, {-1, 0, 3}, {-3, 1, 2}, {-3, 2, 1}}));
    CHECK(multiplicity_at(f, ProjPoint(0, 0, 1)) == 2);
    CHECK(multiplicity_at(hom(xy({{1, 1, 0}, {-1, 0, 1}})), ProjPoint(3, 3, 1)) == 1);
    CHECK(multiplicity_at(f, ProjPoint(1, 1, 1)) == 0);
    HomPoly cusp = hom(xy({{1, 2, 0}, {-1, 0, 3}}));
    CHECK(multiplicity_at(cusp, ProjPoint(0, 0, 1)) == 2);
    CHECK(multiplicity_at(cusp, ProjPoint(1, 0, 0)) == 1);
    CHECK(multiplicity_at(cusp, ProjPoint(0, 1, 0)) == 0);
}

TEST_CASE("local intersection examples") {
    HomPoly par = hom(xy({{1, 0, 1}, {-1, 2, 0}})), axis = hom(xy({{1, 0, 1}}));
    CHECK(local_intersection(par, axis, ProjPoint(0, 0, 1)) == 2);
    CHECK(local_intersection(hom(xy({{1, 1, 0}})), hom(xy({{1, 0, 1}})), ProjPoint(0, 0, 1)) == 1);
    CHECK(local_intersection(par, axis, ProjPoint(1, 1, 1)) == 0);
    Rng rng(1);
    CHECK(intersect_curves(par, axis, rng).total() == 2);
    CHECK_THROWS_AS(local_intersection(par, par, ProjPoint(0, 0, 1)), Error);
}

TEST_CASE("local intersection against graph restriction") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-5, 5), r(-3, 3), k(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        UPoly h({c(rng), c(rng), trial % 3 == 0 ? 0 : c(rng)});
        BiPoly f = BiPoly::variable(1);
        for (int i = 0; i <= h.degree(); ++i) f.add_term({i, 0}, -h.coeff(i));
        BiPoly a;
        for (int i = 0; i < 3; ++i) a.add_term({r(rng) + 3, k(rng) - 1}, c(rng));
        UPoly b = UPoly::constant(1);
        std::vector<std::pair<Rational, int>> planted;
        for (int i = 0; i < 2; ++i) {
            Rational x0 = r(rng);
            bool dup = false;
            for (auto& pr : planted) dup = dup || pr.first == x0;
            if (dup) continue;
            int m = k(rng);
            planted.emplace_back(x0, m);
            for (int j = 0; j < m; ++j) b = b * UPoly({-x0, 1});
        }
        BiPoly g = f * a;
        for (int i = 0; i <= b.degree(); ++i) g.add_term({i, 0}, b.coeff(i));
        UPoly restricted = restrict_to_graph(g, h);
        HomPoly F = hom(f), G = hom(g);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            Rng eng(seed);
            auto inter = intersect_curves(F, G, eng);
            CHECK(inter.total() == F.degree() * G.degree());
            for (auto [x0, m] : planted) {
                ProjPoint p(x0, h(x0), 1);
                CHECK(inter.multiplicity_at(p) == root_multiplicity(restricted, x0));
                CHECK(inter.multiplicity_at(p) == m);
                CHECK(inter.multiplicity_at(p) >= multiplicity_at(F, p) * multiplicity_at(G, p));
            }
        }
    }
}

TEST_CASE("torus intersection length examples") {
    LaurentPoly f2 = lp({{7, 0, 0}, {11, 0, 1}, {13, 2, 0}}), f3 = lp({{17, 0, 0}, {19, 1, 1}});
    CHECK(torus_intersection_length(f2, f3) == 3);
    LaurentPoly f = lp({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    LaurentPoly fp1 = lp({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    CHECK(torus_intersection_length(f, fp1) == 0);
    // s + t = -1 and 2s + 3t = -1 give s = -2, t = 1, both nonzero
    CHECK(torus_intersection_length(f, lp({{1, 0, 0}, {2, 1, 0}, {3, 0, 1}})) == 1);
    // common zeros (0,0) and (1,-1); only the second is a torus point
    CHECK(torus_intersection_length(lp({{1, 1, 0}, {1, 0, 1}}), lp({{1, 0, 1}, {1, 2, 0}})) == 1);
    CHECK_THROWS_AS(torus_intersection_length(lp({{1, 1, 0}, {-1, 0, 1}}), lp({{1, 1, -1}, {-1, 0, 0}})), Error);
    CHECK_THROWS_AS(torus_intersection_length(f, LaurentPoly(f * f2)), Error);
    // Laurent inputs: s^-1 + t^2 and t^-2 - 2s meet where s t^2 = -1 and s t^2 = 1/2
    CHECK(torus_intersection_length(lp({{1, -1, 0}, {1, 0, 2}}), lp({{1, 0, -2}, {-2, 1, 0}})) == 0);
}

TEST_CASE("gcd over a product of fields splits") {
    UPoly m = UPoly({-1, 0, 1});  // x^2 - 1
    YPoly a{UPoly({-1, 1}), UPoly::constant(1)};  // y + x - 1
    YPoly b{UPoly::constant(0), UPoly({1, 1})};   // (x + 1) y
    auto branches = gcd_over_quotient(m, a, b);
    REQUIRE(branches.size() == 2);
    for (const auto& br : branches) {
        CHECK(br.modulus.degree() == 1);
        REQUIRE(br.gcd.size() == 2);
        if (br.modulus(1) == 0) CHECK(br.gcd[0].is_zero());
        else CHECK(br.gcd[0] == UPoly::constant(-2));
    }
}

}
