#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropimpl/complex.hpp"
#include "tropimpl/error.hpp"
#include "tropimpl/fixtures.hpp"
#include "tropimpl/resolution.hpp"

using namespace tropimpl;
using fixtures::poly;

namespace {

WeightedFan fan_of(const TropicalGraph& g) { return make_fan2d(merge_realized(g)); }

std::vector<std::tuple<IntVector, IntVector, Integer>> tuples(const WeightedFan& fan) {
    std::vector<std::tuple<IntVector, IntVector, Integer>> out;
    for (const auto& c : canonical_fan(fan).cones) out.emplace_back(c.generators[0], c.generators[1], c.weight);
    return out;
}

ResolutionDiagram resolve(const std::vector<LaurentPoly>& polys, std::vector<ProjPoint> forced = {}) {
    ResolutionOptions opt;
    opt.forced = std::move(forced);
    return resolve_arrangement(make_arrangement(polys), opt);
}

// Intersection multiplicity of two curves at the origin when both are graphs y = a(x), y = b(x):
// the order of vanishing of a - b.
long graph_contact(const UPoly& a, const UPoly& b) { return (a - b).order_at_zero(); }

std::map<std::pair<std::vector<Integer>, std::vector<Integer>>, long> table_by_points(const ResolutionDiagram& d) {
    std::map<std::pair<std::vector<Integer>, std::vector<Integer>>, long> out;
    for (const auto& [pair, value] : d.intersection_table)
        out[std::minmax(divisor_point(d, pair.first).entries(), divisor_point(d, pair.second).entries())] = value;
    return out;
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("alpha special arrangement") {
    auto polys = fixtures::alpha_special();
    Rng rng(1);
    auto excess = find_excess_points(make_arrangement(polys), rng);
    CHECK(std::find(excess.begin(), excess.end(), ProjPoint(0, 0, 1)) != excess.end());

    auto d = resolve(polys);
    CHECK(d.steps.size() == 4);
    CHECK(d.noether_ok);
    CHECK(d.steps[0].mult_per_divisor.at("F1") == 2);
    CHECK(d.steps[0].mult_per_divisor.at("F2") == 2);
    CHECK(d.steps[0].mult_per_divisor.at("F3") == 2);
    auto chi1 = character_divisor(d, 0);
    CHECK(chi1.at("F1") == 1);
    CHECK(chi1.at("Finf") == -3);
    std::vector<long> coeffs;
    for (const auto& e : d.exceptional) coeffs.push_back(chi1.at(e));
    CHECK(coeffs == std::vector<long>{2, 3, 3, 4});

    CHECK(divisor_point(d, "E1") == IntVector{2, 2, 2});
    CHECK(divisor_point(d, "E2") == IntVector{3, 3, 2});
    CHECK(divisor_point(d, "E3") == IntVector{3, 3, 2});
    CHECK(divisor_point(d, "E4") == IntVector{4, 4, 2});
    CHECK(divisor_point(d, "Finf") == IntVector{-3, -3, -3});

    auto g = build_nongeneric_graph(d, 1);
    auto r = realize(g, true);
    CHECK(f_vector(r) == std::pair<std::size_t, std::size_t>{6, 12});
    CHECK(check_balanced(fan_of(g)).balanced);
    CHECK(oracle::balanced_2fan(tuples(fan_of(g))));
}

TEST_CASE("lines and conic special arrangement") {
    auto polys = fixtures::lines_and_conic_special();
    Rng rng(2);
    auto excess = find_excess_points(make_arrangement(polys), rng);
    CHECK(excess == std::vector<ProjPoint>{ProjPoint(0, 1, 0), ProjPoint(1, 2, 1)});

    auto d = resolve(polys);
    CHECK(d.exceptional.size() == 3);
    CHECK(d.noether_ok);
    std::map<DivisorPair, long> expect{{{"F1", "F2"}, 1}, {{"F1", "F3"}, 1}, {{"E1", "F3"}, 1}, {{"E2", "F2"}, 1}, {{"E2", "Finf"}, 1},
                                       {{"E1", "E2"}, 1}, {{"E3", "F1"}, 1}, {{"E3", "F2"}, 1}, {{"E3", "F3"}, 1}, {{"F2", "F3"}, 2},
                                       {{"F1", "Finf"}, 1}, {{"F3", "Finf"}, 1}};
    CHECK(d.intersection_table == expect);

    CHECK(divisor_point(d, "Finf") == IntVector{-1, -2, -2});
    CHECK(divisor_point(d, "E1") == IntVector{-1, -1, -1});
    CHECK(divisor_point(d, "E2") == IntVector{-2, -2, -3});
    CHECK(divisor_point(d, "E3") == IntVector{1, 1, 1});

    auto g = build_nongeneric_graph(d, 1);
    for (const auto& e : g.edges) {
        bool two = (e.u == "F2" && e.v == "F3") || (e.u == "F1" && e.v == "Finf");
        CHECK(e.weight == (two ? 2 : 1));
    }
    CHECK(check_balanced(fan_of(g)).balanced);
}

TEST_CASE("three general lines need no blow-up") {
    auto polys = std::vector<LaurentPoly>{poly({{1, 0, 0}, {1, 1, 0}}), poly({{1, 0, 0}, {1, 0, 1}}), poly({{2, 0, 0}, {1, 1, 0}, {-1, 0, 1}})};
    auto d = resolve(polys);
    CHECK(d.steps.empty());
    for (const auto& a : d.originals)
        for (const auto& b : d.originals)
            if (a < b) CHECK(d.intersection(a, b) == 1);
    auto g = build_nongeneric_graph(d, 1);
    CHECK(g.vertices.size() == 4);
    CHECK(check_balanced(fan_of(g)).balanced);
}

TEST_CASE("local blow-ups") {
    // y - x^2: smooth, multiplicity one, transverse to the exceptional curve
    LocalCenter parabola{{{"C", bivar(1, 0, 1) + bivar(-1, 2, 0)}}, {"origin"}};
    auto res = blow_up_local(parabola, "E");
    CHECK(res.step.mult_per_divisor.at("C") == 1);
    CHECK(res.excess.empty());
    CHECK(res.intersections.at("C") == 1);

    // a point on no divisor: empty multiplicities and an isolated exceptional curve
    LocalCenter empty{{{"C", bivar(1, 0, 0) + bivar(1, 1, 0)}}, {"free"}};
    auto iso = blow_up_local(empty, "E");
    CHECK(iso.step.mult_per_divisor.empty());
    CHECK(iso.intersections.empty());

    // two tangent branches and a transverse one: the tangent pair leaves an excess point
    BiPoly a = bivar(1, 0, 1) - bivar(1, 2, 0), b = bivar(1, 0, 1) + bivar(1, 2, 0), c = bivar(1, 1, 0);
    auto tangent = blow_up_local({{{"A", a}, {"B", b}, {"C", c}}, {"o"}}, "E");
    REQUIRE(tangent.excess.size() == 1);
    CHECK(tangent.excess[0].divisors.size() == 3);
    CHECK(tangent.intersections.at("C") == 1);
    // contact order 2 between the graphs y = x^2 and y = -x^2 drops by one per blow-up
    CHECK(graph_contact(UPoly({0, 0, 1}), UPoly({0, 0, -1})) == 2);
    auto second = blow_up_local(tangent.excess[0], "E'");
    CHECK(second.excess.empty());
    CHECK(second.intersections.at("A") == 1);
    CHECK(second.intersections.at("B") == 1);
    CHECK(second.intersections.at("E") == 1);
}

TEST_CASE("irrational triple points are refused") {
    auto polys = std::vector<LaurentPoly>{poly({{1, 2, 0}, {-2, 0, 0}}), poly({{1, 0, 1}, {-1, 0, 0}}), poly({{1, 0, 1}, {-1, 2, 0}, {1, 0, 0}})};
    try {
        resolve(polys);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IrrationalExcessPointSuspected);
    }
}

TEST_CASE("step limit and input checks") {
    ResolutionOptions opt;
    opt.max_steps = 2;
    try {
        resolve_arrangement(make_arrangement(fixtures::alpha_special()), opt);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StepLimitExceeded);
    }
    CHECK_THROWS_AS(make_arrangement({poly({{1, -1, 0}, {1, 0, 0}})}), Error);
}

TEST_CASE("projection formula holds on all fixtures") {
    for (const auto& polys : {fixtures::alpha_special(), fixtures::lines_and_conic_special(), fixtures::lines_and_conic_generic(), fixtures::nine_ray_generic(),
                              fixtures::alpha_generic()}) {
        auto d = resolve(polys);
        CHECK(d.noether_ok);
        // independent recount: every final pair of original curves satisfies
        // F_i' . F_j' + sum of products of multiplicities = deg f_i deg f_j
        for (std::size_t a = 0; a < d.originals.size(); ++a)
            for (std::size_t b = a + 1; b < d.originals.size(); ++b) {
                long sum = d.intersection(d.originals[a], d.originals[b]);
                for (const auto& s : d.steps) {
                    auto ia = s.mult_per_divisor.find(d.originals[a]), ib = s.mult_per_divisor.find(d.originals[b]);
                    if (ia != s.mult_per_divisor.end() && ib != s.mult_per_divisor.end()) sum += ia->second * ib->second;
                }
                CHECK(sum == d.degrees[a] * d.degrees[b]);
            }
    }
}

TEST_CASE("exceptional self-consistency: E.(pullback of a line) is zero") {
    // the total transform of a general line has zero degree on every exceptional curve:
    // sum over divisors D of coefficient(D) * (E . D) + coefficient(E) * E^2 = 0, where E^2 = -1 - (#later centers on E)
    for (const auto& polys : {fixtures::alpha_special(), fixtures::lines_and_conic_special()}) {
        auto d = resolve(polys);
        for (const auto& e : d.exceptional) {
            // character divisors are principal: their degree on E vanishes
            for (std::size_t i = 0; i + 1 < d.originals.size(); ++i) {
                auto chi = character_divisor(d, i);
                long self = -1;
                for (const auto& s : d.steps)
                    if (s.mult_per_divisor.count(e)) self -= 1;
                long total = chi.at(e) * self;
                for (const auto& [name, coef] : chi)
                    if (name != e) total += coef * d.intersection(e, name);
                CHECK(total == 0);
            }
        }
    }
}

TEST_CASE("extra blow-ups keep the weighted fan") {
    auto special = fixtures::lines_and_conic_special();
    auto base = fan_of(build_nongeneric_graph(resolve(special), 1));
    auto more = resolve(special, {ProjPoint(0, 1, 1)});
    CHECK(more.forced);
    CHECK(more.steps.size() == 4);
    CHECK(same_weighted_fan(base, fan_of(build_nongeneric_graph(more, 1))));
    // a free point adds an isolated zero vertex only
    auto free_pt = resolve(special, {ProjPoint(5, 7, 1)});
    CHECK(divisor_point(free_pt, free_pt.exceptional.back()).is_zero() == (free_pt.steps.back().mult_per_divisor.empty()));
    CHECK(same_weighted_fan(base, fan_of(build_nongeneric_graph(free_pt, 1))));
}

TEST_CASE("generic inputs agree across pipelines") {
    for (const auto& polys : {fixtures::lines_and_conic_generic(), fixtures::nine_ray_generic(), fixtures::alpha_generic()}) {
        auto generic = fan_of(build_generic_graph(fixtures::generic_input(polys)));
        auto nongeneric = fan_of(build_nongeneric_graph(resolve(polys), 1));
        CHECK(same_weighted_fan(generic, nongeneric));
    }
}

TEST_CASE("split reducible polynomials") {
    auto s = BiPoly::variable(0), t = BiPoly::variable(1), one = BiPoly(Rational(1));
    std::vector<LaurentPoly> polys{LaurentPoly(s * s - t * t), fixtures::poly({{2, 0, 0}, {3, 1, 0}, {5, 0, 2}}), fixtures::poly({{7, 0, 0}, {11, 1, 1}})};
    auto in = fixtures::generic_input(polys);
    auto split = split_reducible(in, 0, {LaurentPoly(s - t), LaurentPoly(s + t)});
    CHECK(split.input.polys.size() == 4);
    CHECK(split.beta == IntMatrix::from_rows({IntVector{1, 1, 0, 0}, IntVector{0, 0, 1, 0}, IntVector{0, 0, 0, 1}}));
    try {
        split_reducible(in, 0, {polys[0], LaurentPoly(one)});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnitFactor);
    }
    try {
        split_reducible(in, 0, {LaurentPoly(s - t), LaurentPoly(s + t + one)});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FactorMismatch);
    }
}

TEST_CASE("split map pushed along beta gives the original fan") {
    auto s = BiPoly::variable(0), t = BiPoly::variable(1), one = BiPoly(Rational(1));
    LaurentPoly g(s - t), h(s + t + one);
    std::vector<LaurentPoly> polys{LaurentPoly(g * h), fixtures::poly({{2, 0, 0}, {3, 1, 0}, {5, 0, 2}}), fixtures::poly({{7, 0, 0}, {11, 1, 1}})};
    auto original = fan_of(build_nongeneric_graph(resolve(polys), 1));
    CHECK(check_balanced(original).balanced);
    auto split = split_reducible(fixtures::generic_input(polys), 0, {g, h});
    auto lifted = fan_of(build_nongeneric_graph(resolve(split.input.polys), 1));
    CHECK(check_balanced(lifted).balanced);
    auto pushed = pushforward_fan(lifted, split.beta, 1);
    CHECK(check_balanced(pushed).balanced);
    CHECK(same_weighted_fan(pushed, original));
}


TEST_CASE("blowing up a crossing matches the geometric blow-up") {
    auto special = fixtures::lines_and_conic_special();
    auto geometric = resolve(special, {ProjPoint(0, 1, 1)});
    auto combinatorial = blow_up_crossing(resolve(special), "F1", "F2");
    // exceptional names follow processing order, so compare by valuation
    CHECK(table_by_points(geometric) == table_by_points(combinatorial));
    CHECK(geometric.exceptional.size() == combinatorial.exceptional.size());

    auto alpha = resolve(fixtures::alpha_special());
    auto more = blow_up_crossing(alpha, "E4", "F1");
    CHECK(more.exceptional.size() == 5);
    CHECK(divisor_point(more, "E5") == divisor_point(alpha, "E4") + divisor_point(alpha, "F1"));
    CHECK(more.intersection("E4", "F1") == 0);
    CHECK(same_weighted_fan(fan_of(build_nongeneric_graph(alpha, 1)), fan_of(build_nongeneric_graph(more, 1))));
    CHECK_THROWS_AS(blow_up_crossing(alpha, "F1", "F2"), Error);  // F1.F2 = 2 after resolution
    CHECK_THROWS_AS(blow_up_crossing(alpha, "F1", "E9"), Error);

    ResolutionOptions opt;
    opt.crossings = {{"E4", "F1"}};
    auto via_options = resolve_arrangement(make_arrangement(fixtures::alpha_special()), opt);
    CHECK(via_options.intersection_table == more.intersection_table);
    CHECK(via_options.forced);
}

}
