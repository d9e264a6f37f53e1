#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropimpl/error.hpp"
#include "tropimpl/fixtures.hpp"

using namespace tropimpl;
using fixtures::poly;

namespace {

std::size_t count_zero(const TropicalGraph& g) {
    std::size_t z = 0;
    for (const auto& e : g.edges) z += e.zero;
    return z;
}

std::vector<std::tuple<IntVector, IntVector, Integer>> tuples(const WeightedFan& fan) {
    std::vector<std::tuple<IntVector, IntVector, Integer>> out;
    for (const auto& c : canonical_fan(fan).cones) out.emplace_back(c.generators[0], c.generators[1], c.weight);
    return out;
}

bool has_point(const TropicalGraph& g, const IntVector& p) { return g.find_point(p) != nullptr; }

}  // namespace

TEST_SUITE("generic") {

TEST_CASE("squarefree test") {
    Rng rng(3);
    auto s = BiPoly::variable(0), t = BiPoly::variable(1), one = BiPoly(Rational(1));
    CHECK(is_squarefree(s * t + one, rng));
    CHECK_FALSE(is_squarefree((s + t) * (s + t) * (s - one), rng));
    CHECK_FALSE(is_squarefree((s - one) * (s - one), rng));
    CHECK(is_squarefree((s - one) * (s + one) * t, rng));
    CHECK(is_squarefree(s * s - t * t * t, rng));
    // planted squares of random factors
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        BiPoly p = bivar(d(rng), 1, 0) + bivar(d(rng), 0, 1) + bivar(d(rng) + 10, 0, 0) + bivar(d(rng), 1, 1);
        BiPoly q = bivar(1, 2, 0) + bivar(d(rng), 0, 1) + bivar(d(rng) + 20, 0, 0);
        if (p.total_degree() < 1) continue;
        CHECK_FALSE(is_squarefree(p * p * q, rng));
        CHECK(is_squarefree(p * q, rng));
    }
}

TEST_CASE("nine ray fixture") {
    auto in = fixtures::generic_input(fixtures::nine_ray_generic());
    auto cert = certify_generic(in);
    CHECK(cert.accepted());
    auto g = build_generic_graph(in, &cert);
    CHECK(g.vertices.size() == 12);  // three curves and nine toric divisors, none zero
    for (const auto& p : {IntVector{-5, -3, -4}, IntVector{0, -1, -1}, IntVector{0, 1, 2}, IntVector{-2, -1, -2}}) CHECK(has_point(g, p));
    std::size_t twice = 0;
    for (const auto& v : g.vertices) twice += v.point == IntVector{-2, -1, -2};
    CHECK(twice == 2);
    CHECK(g.edges.size() - count_zero(g) == 19);
    CHECK(count_zero(g) == 2);
    // the dashed edges end at (0,-1,-1) and (0,1,2)
    for (const auto& e : g.edges) {
        if (!e.zero) continue;
        auto a = g.find(e.u)->point, b = g.find(e.v)->point;
        CHECK((a == IntVector{0, -1, -1} || b == IntVector{0, -1, -1} || a == IntVector{0, 1, 2} || b == IntVector{0, 1, 2}));
    }
    auto merged = merge_realized(g);
    CHECK(merged.vertices.size() == 11);  // eight distinct toric points
    CHECK(f_vector(realize(g, true)) == std::pair<std::size_t, std::size_t>{7, 13});
    auto fan = make_fan2d(merged);
    CHECK(check_balanced(fan).balanced);
    CHECK(oracle::balanced_2fan(tuples(fan)));
}

TEST_CASE("alpha fixture") {
    auto in = fixtures::generic_input(fixtures::alpha_generic());
    auto g = build_generic_graph(in);
    CHECK(g.meta.notes.at("rays").size() > 0);
    std::vector<LatticePolygon> ps;
    for (const auto& f : in.polys) ps.push_back(newton_polygon(f));
    CHECK(common_refinement(ps).rays.size() == 8);
    for (const auto& p : {IntVector{-9, -6, -9}, IntVector{-3, -3, -3}, IntVector{-6, -9, -9}, IntVector{2, 2, 2}, IntVector{2, 2, 3}}) CHECK(has_point(g, p));
    CHECK_FALSE(has_point(g, IntVector{0, 0, 0}));
    CHECK(g.vertices.size() == 9);
    CHECK(g.edges.size() == 14);
    auto merged = merge_realized(g);
    CHECK(merged.vertices.size() == 8);
    CHECK(check_balanced(make_fan2d(merged)).balanced);
}

TEST_CASE("lines and conic fixture") {
    auto in = fixtures::generic_input(fixtures::lines_and_conic_generic());
    auto g = realize(build_generic_graph(in), true);
    CHECK(f_vector(g) == std::pair<std::size_t, std::size_t>{5, 8});
    IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, d3{-1, -2, -2}, d4{-2, -2, -3};
    CHECK(has_point(g, d3));
    CHECK(has_point(g, d4));
    CHECK(g.weight_between(e1, e2) == 2);
    CHECK(g.weight_between(e1, e3) == 2);
    CHECK(g.weight_between(e2, e3) == 3);
    CHECK(g.weight_between(e1, d3) == 2);
    int ones = 0;
    for (const auto& e : g.edges) ones += e.weight == 1;
    CHECK(ones == 4);
    CHECK(check_balanced(make_fan2d(g)).balanced);
}

TEST_CASE("special coefficients are rejected with witnesses") {
    auto in = fixtures::generic_input(fixtures::lines_and_conic_special());
    auto cert = certify_generic(in);
    CHECK_FALSE(cert.accepted());
    bool triple = false;
    for (const auto& v : cert.violations)
        if (v.kind == ViolationKind::TripleTorusPoint) {
            triple = true;
            CHECK(v.witness.find("(s,t)=(1,2)") != std::string::npos);
        }
    CHECK(triple);
    try {
        build_generic_graph(in, &cert);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCertified);
    }
    in.options.force = true;
    auto g = build_generic_graph(in, &cert);
    CHECK(g.meta.forced);

    CHECK_FALSE(certify_generic(fixtures::generic_input(fixtures::alpha_special())).accepted());
}

TEST_CASE("single polynomial is accepted vacuously") {
    auto in = fixtures::generic_input({poly({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}})});
    CHECK(certify_generic(in).accepted());
    CHECK_THROWS_AS(build_generic_graph(in), Error);
}

TEST_CASE("repeated factors, shared factors and monomial content") {
    auto s = BiPoly::variable(0), t = BiPoly::variable(1), one = BiPoly(Rational(1));
    LaurentPoly sq((s + t + one) * (s + t + one));
    auto in = fixtures::generic_input({sq, LaurentPoly(s * t + Rational(2) * one), LaurentPoly(s + Rational(3) * t * t + Rational(5) * one)});
    auto cert = certify_generic(in);
    bool repeated = false;
    for (const auto& v : cert.violations) repeated = repeated || (v.kind == ViolationKind::RepeatedFactor && v.polys == std::vector<std::size_t>{1});
    CHECK(repeated);

    auto shared = fixtures::generic_input({LaurentPoly((s - t) * (s + one)), LaurentPoly((s - t) * (t + Rational(2) * one)), LaurentPoly(s * t + Rational(7) * one)});
    bool common = false;
    for (const auto& v : certify_generic(shared).violations) common = common || (v.kind == ViolationKind::RepeatedFactor && v.polys.size() == 2);
    CHECK(common);

    auto polys = fixtures::lines_and_conic_generic();
    polys[0] = LaurentPoly(polys[0] * bivar(1, 1, -2));
    auto warned = certify_generic(fixtures::generic_input(polys));
    CHECK(warned.accepted());
    REQUIRE(warned.warnings.size() == 1);
    CHECK(warned.warnings[0].kind == ViolationKind::MonomialFactor);
}

TEST_CASE("monomial scaling shifts one coordinate of the toric vertices") {
    auto base = fixtures::lines_and_conic_generic();
    auto scaled = base;
    scaled[1] = LaurentPoly(scaled[1] * bivar(3, 2, -1));
    auto g0 = build_generic_graph(fixtures::generic_input(base));
    auto g1 = build_generic_graph(fixtures::generic_input(scaled));
    std::vector<LatticePolygon> ps;
    for (const auto& f : base) ps.push_back(newton_polygon(f));
    auto rays = common_refinement(ps).rays;
    std::size_t common = 0;
    for (const auto& a : g0.vertices) {
        const Vertex* b = g1.find(a.id);
        if (!b || a.kind != VertexKind::Toric) continue;
        ++common;
        std::size_t idx = std::stoul(a.id.substr(1)) - 1;
        IntVector shift = b->point - a.point;
        CHECK(shift[0] == 0);
        CHECK(shift[2] == 0);
        CHECK(shift[1] == 2 * rays[idx][0] - rays[idx][1]);
    }
    CHECK(common >= 3);
    // intersection counts in the torus do not see the monomial
    for (const auto& e : g0.edges) {
        if (e.u[0] != 'e' || e.v[0] != 'e') continue;
        for (const auto& f : g1.edges)
            if (f.u == e.u && f.v == e.v) CHECK(f.weight == e.weight);
    }
    CHECK(check_balanced(make_fan2d(merge_realized(g1))).balanced);
}

TEST_CASE("curve weights match mixed volumes on certified inputs") {
    for (const auto& polys : {fixtures::nine_ray_generic(), fixtures::alpha_generic(), fixtures::lines_and_conic_generic()}) {
        auto in = fixtures::generic_input(polys);
        auto exact = build_generic_graph(in);
        in.options.use_mixed_volume = true;
        auto fast = build_generic_graph(in);
        CHECK(exact == fast);
        for (const auto& e : exact.edges) {
            if (e.u[0] != 'e' || e.v[0] != 'e') continue;
            std::size_t i = std::stoul(e.u.substr(1)) - 1, j = std::stoul(e.v.substr(1)) - 1;
            // independent count: twice-area of P+Q minus the parts, halved
            auto p = newton_polygon(polys[i]), q = newton_polygon(polys[j]);
            std::vector<IntVector> sums;
            for (const auto& a : p.vertices)
                for (const auto& b : q.vertices) sums.push_back(a + b);
            Integer mv = (twice_area(convex_hull(sums)) - twice_area(p) - twice_area(q)) / 2;
            CHECK(e.weight == Rational(mv));
        }
    }
}

TEST_CASE("delta divides weights and rejects fractions") {
    auto in = fixtures::generic_input(fixtures::alpha_generic());
    in.delta = 1;
    auto g1 = build_generic_graph(in);
    in.delta = 3;
    try {
        build_generic_graph(in);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegralWeight);
    }
    // a map that factors through squaring has every weight doubled
    auto polys = fixtures::lines_and_conic_generic();
    std::vector<LaurentPoly> squared;
    auto sq = std::array<BiPoly, 2>{bivar(1, 2, 0), bivar(1, 0, 1)};
    for (const auto& f : polys) squared.push_back(LaurentPoly(f.substitute<2>(sq)));
    auto in2 = fixtures::generic_input(squared);
    Rng rng(11);
    CHECK(count_preimages(squared, rng) == 2);
    CHECK(count_preimages(polys, rng) == 1);
    in2.delta = 2;
    auto halved = build_generic_graph(in2);
    auto plain = build_generic_graph(fixtures::generic_input(polys));
    CHECK(same_weighted_fan(make_fan2d(merge_realized(halved)), make_fan2d(merge_realized(plain))));
}

}
