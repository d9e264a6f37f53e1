#include <algorithm>
#include <functional>
#include <set>

#include "tropimpl/cli.hpp"
#include "tropimpl/error.hpp"
#include "tropimpl/fixtures.hpp"
#include "tropimpl/serialize.hpp"

namespace tropimpl::cli {

using nlohmann::json;

std::vector<std::string> fixture_names() { return {"nine-ray", "alpha", "lines-and-conic", "alpha-special", "lines-and-conic-special"}; }

InputDocument fixture_document(const std::string& name) {
    if (name == "nine-ray") return make_document(fixtures::nine_ray_generic());
    if (name == "alpha") return make_document(fixtures::alpha_generic());
    if (name == "lines-and-conic") return make_document(fixtures::lines_and_conic_generic());
    if (name == "alpha-special") return make_document(fixtures::alpha_special());
    if (name == "lines-and-conic-special") return make_document(fixtures::lines_and_conic_special());
    throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

namespace {

class Suite {
public:
    void check(const std::string& name, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        bool ok = detail.empty();
        passed_ = passed_ && ok;
        json item{{"name", name}, {"passed", ok}};
        if (!ok) item["detail"] = detail;
        items_.push_back(item);
    }

    json report() const { return {{"passed", passed_}, {"checks", items_}}; }

private:
    bool passed_ = true;
    json items_ = json::array();
};

std::string expect(bool cond, const std::string& what) { return cond ? "" : what; }

bool has_point(const TropicalGraph& g, const IntVector& p) { return g.find_point(p) != nullptr; }

std::size_t count_point(const TropicalGraph& g, const IntVector& p) {
    return std::count_if(g.vertices.begin(), g.vertices.end(), [&](const Vertex& v) { return v.point == p; });
}

std::string fv(const TropicalGraph& g) {
    auto [v, e] = f_vector(g);
    return "(" + std::to_string(v) + "," + std::to_string(e) + ")";
}

std::vector<LatticePolygon> polygons(const std::vector<LaurentPoly>& polys) {
    std::vector<LatticePolygon> out;
    for (const auto& f : polys) out.push_back(newton_polygon(f));
    return out;
}

std::string balanced(const TropicalGraph& g) { return expect(check_balanced(make_fan2d(merge_realized(g))).balanced, "fan is not balanced"); }

ResolutionDiagram resolve(const std::vector<LaurentPoly>& polys) { return resolve_arrangement(make_arrangement(polys)); }

}  // namespace

json run_fixture_suite() {
    Suite suite;
    using fixtures::poly;

    suite.check("newton polygon of b1 st + b2 s + b3 t", [] {
        auto p = newton_polygon(poly({{2, 1, 1}, {3, 1, 0}, {5, 0, 1}}));
        std::vector<IntVector> v = p.vertices, want{IntVector{1, 1}, IntVector{1, 0}, IntVector{0, 1}};
        std::sort(v.begin(), v.end());
        std::sort(want.begin(), want.end());
        return expect(p.dim == 2 && v == want, "unexpected hull");
    });
    suite.check("tropical evaluation gives -3", [] { return expect(trop_eval(poly({{1, 2, 0}, {1, 3, 0}, {1, 0, 2}}), IntVector{-1, -1}) == -3, "wrong value"); });
    suite.check("homogenization of degree one and two inputs", [] {
        auto f1 = homogenize(poly({{-1, 0, 0}, {-1, 1, 0}, {1, 0, 1}}));
        auto f3 = homogenize(poly({{2, 0, 0}, {-1, 1, 1}}));
        TriPoly want1, want3;
        want1.add_term({0, 0, 1}, -1);
        want1.add_term({1, 0, 0}, -1);
        want1.add_term({0, 1, 0}, 1);
        want3.add_term({0, 0, 2}, 2);
        want3.add_term({1, 1, 0}, -1);
        return expect(f1.degree() == 1 && f1.poly() == want1 && f3.degree() == 2 && f3.poly() == want3, "unexpected forms");
    });
    suite.check("torus intersection of the conic and the hyperbola is 3", [] {
        auto p = fixtures::lines_and_conic_generic();
        return expect(torus_intersection_length(p[1], p[2]) == 3, "wrong count");
    });
    suite.check("mixed volume of the conic and hyperbola polygons is 3", [] {
        auto p = convex_hull({IntVector{0, 0}, IntVector{0, 1}, IntVector{2, 0}}), q = convex_hull({IntVector{0, 0}, IntVector{1, 1}});
        return expect(mixed_volume(p, q) == 3, "wrong mixed volume");
    });
    suite.check("refined fans have nine and eight rays", [] {
        return expect(common_refinement(polygons(fixtures::nine_ray_generic())).rays.size() == 9 && common_refinement(polygons(fixtures::alpha_generic())).rays.size() == 8,
                      "wrong ray counts");
    });

    suite.check("nine-ray generic graph", [] {
        auto g = build_generic_graph(fixtures::generic_input(fixtures::nine_ray_generic()));
        for (const auto& p : {IntVector{-5, -3, -4}, IntVector{0, -1, -1}, IntVector{0, 1, 2}})
            if (!has_point(g, p)) return "missing vertex " + p.to_string();
        if (count_point(g, IntVector{-2, -1, -2}) != 2) return std::string("two toric divisors should share (-2,-1,-2)");
        std::size_t positive = 0, zero = 0;
        for (const auto& e : g.edges) {
            if (!e.zero) {
                ++positive;
                continue;
            }
            ++zero;
            auto a = g.find(e.u)->point, b = g.find(e.v)->point;
            bool ok = a == IntVector{0, -1, -1} || b == IntVector{0, -1, -1} || a == IntVector{0, 1, 2} || b == IntVector{0, 1, 2};
            if (!ok) return std::string("unexpected zero edge");
        }
        if (positive != 19 || zero != 2) return "edges " + std::to_string(positive) + "+" + std::to_string(zero);
        auto merged = merge_realized(g);
        std::set<std::vector<Integer>> toric;
        for (const auto& v : merged.vertices)
            if (v.kind == VertexKind::Toric) toric.insert(v.point.entries());
        if (toric.size() != 8) return std::string("expected 8 distinct toric points");
        auto r = realize(g, true);
        return expect(fv(r) == "(7,13)", "f-vector " + fv(r)) + balanced(g);
    });
    suite.check("aligned vertices subdivide the coplanar cones", [] {
        auto fan = make_fan2d(merge_realized(build_generic_graph(fixtures::generic_input(fixtures::nine_ray_generic()))));
        bool a = false, b = false, spanning = false;
        for (const auto& c : fan.cones)
            for (const auto& r : c.generators) {
                a = a || r == IntVector{-2, -1, -2};
                b = b || r == IntVector{-3, -2, -3};
            }
        for (const auto& c : fan.cones) {
            bool e2 = c.generators[0] == IntVector{0, 1, 0} || c.generators[1] == IntVector{0, 1, 0};
            bool d5 = c.generators[0] == IntVector{-1, -1, -1} || c.generators[1] == IntVector{-1, -1, -1};
            spanning = spanning || (e2 && d5);
        }
        return expect(a && b && !spanning, "chain is not subdivided");
    });
    suite.check("alpha generic graph", [] {
        auto g = build_generic_graph(fixtures::generic_input(fixtures::alpha_generic()));
        for (const auto& p : {IntVector{-9, -6, -9}, IntVector{-3, -3, -3}, IntVector{-6, -9, -9}, IntVector{2, 2, 2}, IntVector{2, 2, 3}})
            if (!has_point(g, p)) return "missing vertex " + p.to_string();
        if (has_point(g, IntVector{0, 0, 0})) return std::string("zero vertex kept");
        if (g.edges.size() != 14) return "edges " + std::to_string(g.edges.size());
        if (count_point(g, IntVector{2, 2, 3}) != 2 || count_point(merge_realized(g), IntVector{2, 2, 3}) != 1) return std::string("(2,2,3) not merged");
        return balanced(g);
    });
    suite.check("lines and conic generic graph", [] {
        auto g = realize(build_generic_graph(fixtures::generic_input(fixtures::lines_and_conic_generic())), true);
        if (fv(g) != "(5,8)") return "f-vector " + fv(g);
        IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, d3{-1, -2, -2}, d4{-2, -2, -3};
        if (!has_point(g, d3) || !has_point(g, d4)) return std::string("missing toric vertex");
        bool ok = g.weight_between(e1, e2) == 2 && g.weight_between(e1, e3) == 2 && g.weight_between(e2, e3) == 3 && g.weight_between(e1, d3) == 2;
        int ones = 0;
        for (const auto& e : g.edges) ones += e.weight == 1;
        return expect(ok && ones == 4, "wrong weights") + balanced(g);
    });
    suite.check("special lines and conic are rejected with witness (1,2)", [] {
        auto cert = certify_generic(fixtures::generic_input(fixtures::lines_and_conic_special()));
        for (const auto& v : cert.violations)
            if (v.kind == ViolationKind::TripleTorusPoint && v.witness.find("(s,t)=(1,2)") != std::string::npos) return std::string();
        return std::string("no triple point witness");
    });

    suite.check("excess points of the special arrangements", [] {
        Rng rng(kDefaultSeed);
        auto a = find_excess_points(make_arrangement(fixtures::lines_and_conic_special()), rng);
        auto b = find_excess_points(make_arrangement(fixtures::alpha_special()), rng);
        bool ok = a == std::vector<ProjPoint>{ProjPoint(0, 1, 0), ProjPoint(1, 2, 1)} && std::find(b.begin(), b.end(), ProjPoint(0, 0, 1)) != b.end();
        return expect(ok, "unexpected excess points");
    });
    suite.check("alpha special resolution", [] {
        auto d = resolve(fixtures::alpha_special());
        if (d.steps.size() != 4) return "blow-ups " + std::to_string(d.steps.size());
        for (const char* f : {"F1", "F2", "F3"})
            if (d.steps[0].mult_per_divisor.at(f) != 2) return std::string("first multiplicities are not 2");
        auto chi = character_divisor(d, 0);
        std::vector<long> coeffs;
        for (const auto& e : d.exceptional) coeffs.push_back(chi.at(e));
        if (coeffs != std::vector<long>{2, 3, 3, 4} || chi.at("Finf") != -3 || chi.at("F1") != 1) return std::string("wrong pullback of chi_1");
        bool pts = divisor_point(d, "E1") == IntVector{2, 2, 2} && divisor_point(d, "E2") == IntVector{3, 3, 2} && divisor_point(d, "E3") == IntVector{3, 3, 2} &&
                   divisor_point(d, "E4") == IntVector{4, 4, 2} && divisor_point(d, "Finf") == IntVector{-3, -3, -3};
        if (!pts) return std::string("wrong valuations");
        auto g = build_nongeneric_graph(d, 1);
        auto r = realize(g, true);
        return expect(fv(r) == "(6,12)", "f-vector " + fv(r)) + expect(d.noether_ok, "projection formula failed") + balanced(g);
    });
    suite.check("lines and conic special resolution", [] {
        auto d = resolve(fixtures::lines_and_conic_special());
        if (d.exceptional.size() != 3) return std::string("expected three exceptional curves");
        // the listed table, with the entry between the two curves over (0:1:0) read as E1.E2
        std::map<DivisorPair, long> listed{{{"F1", "F2"}, 1}, {{"F1", "F3"}, 1}, {{"E1", "F3"}, 1}, {{"E2", "F2"}, 1}, {{"E2", "Finf"}, 1},
                                           {{"E1", "E2"}, 1}, {{"E3", "F1"}, 1}, {{"E3", "F2"}, 1}, {{"E3", "F3"}, 1}, {{"F2", "F3"}, 2}};
        for (const auto& [pair, value] : listed)
            if (d.intersection(pair.first, pair.second) != value) return "entry " + pair.first + "." + pair.second;
        bool pts = divisor_point(d, "Finf") == IntVector{-1, -2, -2} && divisor_point(d, "E1") == IntVector{-1, -1, -1} &&
                   divisor_point(d, "E2") == IntVector{-2, -2, -3} && divisor_point(d, "E3") == IntVector{1, 1, 1};
        if (!pts) return std::string("wrong valuations");
        auto g = build_nongeneric_graph(d, 1);
        for (const auto& e : g.edges) {
            bool two = (e.u == "F2" && e.v == "F3") || (e.u == "F1" && e.v == "Finf");
            if (e.weight != (two ? 2 : 1)) return "weight of " + e.u + "-" + e.v;
        }
        return expect(d.noether_ok, "projection formula failed") + balanced(g);
    });
    suite.check("split map matrix", [] {
        auto s = BiPoly::variable(0), t = BiPoly::variable(1);
        auto polys = fixtures::lines_and_conic_generic();
        polys[0] = LaurentPoly(s * s - t * t);
        auto split = split_reducible(fixtures::generic_input(polys), 0, {LaurentPoly(s - t), LaurentPoly(s + t)});
        return expect(split.beta == IntMatrix::from_rows({IntVector{1, 1, 0, 0}, IntVector{0, 0, 1, 0}, IntVector{0, 0, 0, 1}}), "wrong matrix");
    });
    suite.check("plane and tripod complexes", [] {
        IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, m{-1, -1, -1}, ex{1, 1, 1};
        BoundaryComplexInput plane{3, 2, {{"e1", e1}, {"e2", e2}, {"e3", e3}, {"m", m}}, {}};
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) plane.cells.push_back({{a, b}, 1});
        auto fan = realize_weighted_complex(plane);
        bool ok = fan.cones.size() == 6 && check_balanced(fan).balanced;
        for (const auto& c : fan.cones) ok = ok && c.weight == 1;
        BoundaryComplexInput tripod{3, 2, {{"e1", e1}, {"e2", e2}, {"e3", e3}, {"m", m}, {"E", ex}}, {}};
        for (std::size_t a = 0; a < 3; ++a) {
            tripod.cells.push_back({{a, 3}, 1});
            tripod.cells.push_back({{a, 4}, 1});
        }
        auto blown = realize_weighted_complex(tripod);
        bool has_e = false;
        for (const auto& c : blown.cones) {
            ok = ok && c.weight == 1;
            has_e = has_e || c.generators[1] == ex;
        }
        return expect(ok && has_e && blown.cones.size() == 6 && check_balanced(blown).balanced, "unexpected complex fans");
    });
    suite.check("zero edges are dashed in dot output", [] {
        auto g = build_generic_graph(fixtures::generic_input(fixtures::nine_ray_generic()));
        return expect(serialize(g, Format::Dot).find("style=dashed") != std::string::npos, "no dashed edge");
    });

    suite.check("input document of the special lines and conic", [] {
        auto doc = parse_input(document_to_json(fixture_document("lines-and-conic-special")).dump());
        std::vector<long> degs;
        for (const auto& f : doc.polys) degs.push_back(f.total_degree());
        return expect(doc.polys.size() == 3 && degs == std::vector<long>{1, 2, 2} && doc.polys[0] == fixtures::lines_and_conic_special()[0], "unexpected document");
    });
    suite.check("generic command with bivalent suppression", [] {
        RunFlags flags;
        flags.suppress_bivalent = true;
        auto r = run_generic(fixture_document("lines-and-conic"), flags);
        return expect(r.exit_code == 0 && r.graph && fv(*r.graph) == "(5,8)", "unexpected result");
    });
    suite.check("nongeneric command finds (1,1,1)", [] {
        auto r = run_nongeneric(fixture_document("lines-and-conic-special"), {});
        return expect(r.exit_code == 0 && r.graph && has_point(*r.graph, IntVector{1, 1, 1}), "missing (1,1,1)");
    });
    suite.check("check command rejects the special input", [] {
        auto r = run_check(fixture_document("lines-and-conic-special"), {});
        return expect(r.exit_code == 1 && r.report.dump().find("(s,t)=(1,2)") != std::string::npos, "no rejection");
    });
    return suite.report();
}

}  // namespace tropimpl::cli
