#include "doctest.h"
#include "oracles.hpp"
#include "tropimpl/error.hpp"
#include "tropimpl/graph.hpp"
#include "tropimpl/serialize.hpp"

using namespace tropimpl;

namespace {

TropicalGraph make_graph(std::vector<std::pair<std::string, IntVector>> vs, std::vector<std::tuple<std::string, std::string, long>> es) {
    TropicalGraph g;
    for (auto& [id, p] : vs) g.vertices.push_back({id, id, p, VertexKind::Toric});
    for (auto& [u, v, w] : es) g.edges.push_back({u, v, Rational(w), w == 0});
    return g;
}

// Tropical plane graph with the edge (e1,e2) split at (1,1,0).
TropicalGraph subdivided_plane() {
    return make_graph({{"e1", IntVector{1, 0, 0}}, {"e2", IntVector{0, 1, 0}}, {"e3", IntVector{0, 0, 1}}, {"m", IntVector{-1, -1, -1}}, {"s", IntVector{1, 1, 0}}},
                      {{"e1", "s", 1}, {"s", "e2", 1}, {"e1", "e3", 1}, {"e2", "e3", 1}, {"e1", "m", 1}, {"e2", "m", 1}, {"e3", "m", 1}});
}

std::vector<std::tuple<IntVector, IntVector, Integer>> tuples(const WeightedFan& fan) {
    std::vector<std::tuple<IntVector, IntVector, Integer>> out;
    for (const auto& c : canonical_fan(fan).cones) out.emplace_back(c.generators[0], c.generators[1], c.weight);
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("merge joins equal points and drops zero vertices") {
    auto g = make_graph({{"a", IntVector{1, 0}}, {"b", IntVector{0, 1}}, {"c", IntVector{0, 1}}, {"z", IntVector{0, 0}}, {"d", IntVector{-1, -1}}},
                        {{"a", "b", 1}, {"a", "c", 2}, {"a", "z", 3}, {"b", "d", 1}, {"c", "d", 0}, {"b", "c", 4}});
    auto m = merge_realized(g);
    CHECK(m.vertices.size() == 3);
    CHECK(m.find_point(IntVector{0, 0}) == nullptr);
    const Vertex* bc = m.find_point(IntVector{0, 1});
    REQUIRE(bc);
    CHECK(bc->label == "b=c");
    CHECK(m.weight_between(IntVector{1, 0}, IntVector{0, 1}) == 3);
    CHECK(m.weight_between(IntVector{0, 1}, IntVector{-1, -1}) == 1);
    CHECK(m.edges.size() == 2);
    CHECK(f_vector(g) == std::pair<std::size_t, std::size_t>{3, 2});
}

TEST_CASE("merge leaves a graph without coincidences alone") {
    auto g = make_graph({{"a", IntVector{1, 0, 0}}, {"b", IntVector{0, 1, 0}}, {"c", IntVector{0, 0, 1}}}, {{"a", "b", 1}, {"b", "c", 2}, {"a", "c", 3}});
    auto m = merge_realized(g);
    CHECK(m.vertices.size() == 3);
    CHECK(m.edges.size() == 3);
    CHECK(m.weight_between(IntVector{0, 1, 0}, IntVector{0, 0, 1}) == 2);
}

TEST_CASE("suppress removes straight bivalent vertices only") {
    auto g = subdivided_plane();
    auto s = suppress_bivalent(g);
    CHECK(s.vertices.size() == 4);
    CHECK(s.edges.size() == 6);
    CHECK(s.weight_between(IntVector{1, 0, 0}, IntVector{0, 1, 0}) == 1);

    // unequal weights keep the vertex
    g.edges[0].weight = 2;
    CHECK(suppress_bivalent(g).vertices.size() == 5);

    // a bent bivalent vertex stays: (1,1,1) is not inside the cone of (1,0,0),(0,1,0)
    auto bent = make_graph({{"a", IntVector{1, 0, 0}}, {"b", IntVector{0, 1, 0}}, {"k", IntVector{1, 1, 1}}}, {{"a", "k", 1}, {"k", "b", 1}});
    CHECK(suppress_bivalent(bent).vertices.size() == 3);

    auto triangle = make_graph({{"a", IntVector{1, 0, 0}}, {"b", IntVector{0, 1, 0}}, {"c", IntVector{0, 0, 1}}}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
    auto t = suppress_bivalent(triangle);
    CHECK(t.vertices.size() == 3);
    CHECK(t.edges.size() == 3);
}

TEST_CASE("suppress applies to a fixpoint along a chain") {
    auto g = make_graph({{"a", IntVector{1, 0}}, {"p", IntVector{2, 1}}, {"q", IntVector{1, 1}}, {"r", IntVector{1, 2}}, {"b", IntVector{0, 1}}},
                        {{"a", "p", 2}, {"p", "q", 2}, {"q", "r", 2}, {"r", "b", 2}});
    auto s = suppress_bivalent(g);
    CHECK(s.vertices.size() == 2);
    REQUIRE(s.edges.size() == 1);
    CHECK(s.edges[0].weight == 2);
}

TEST_CASE("merge and suppress keep the weighted fan") {
    auto g = subdivided_plane();
    auto before = make_fan2d(merge_realized(g));
    auto after = make_fan2d(realize(g, true));
    CHECK(same_weighted_fan(before, after));
    CHECK(check_balanced(after).balanced);
    CHECK(oracle::balanced_2fan(tuples(after)));
    auto fv = f_vector(realize(g, true));
    CHECK(fv.second <= fv.first * (fv.first - 1) / 2);
}

TEST_CASE("collinear chain is subdivided by refinement") {
    // vertices on a common plane: the long edge passes through the middle point
    auto g = make_graph({{"x", IntVector{1, 0, 0}}, {"y", IntVector{1, 2, 0}}, {"mid", IntVector{1, 1, 0}}},
                        {{"x", "y", 1}, {"x", "mid", 1}});
    auto r = refine_overlaps(g);
    CHECK(r.weight_between(IntVector{1, 0, 0}, IntVector{1, 1, 0}) == 2);
    CHECK(r.weight_between(IntVector{1, 1, 0}, IntVector{1, 2, 0}) == 1);
    CHECK(r.weight_between(IntVector{1, 0, 0}, IntVector{1, 2, 0}) == 0);
}

TEST_CASE("vertices on a common ray are merged by refinement") {
    auto g = make_graph({{"a", IntVector{1, 1, 1}}, {"b", IntVector{2, 2, 2}}, {"c", IntVector{1, 0, 0}}}, {{"a", "c", 1}, {"b", "c", 1}});
    auto r = refine_overlaps(g);
    CHECK(r.vertices.size() == 2);
    CHECK(r.weight_between(IntVector{1, 1, 1}, IntVector{1, 0, 0}) == 2);
}

TEST_CASE("make_fan2d cones and errors") {
    auto two = make_graph({{"a", IntVector{1, 0, 0}}, {"b", IntVector{0, 1, 0}}, {"c", IntVector{0, 0, 1}}, {"d", IntVector{1, 1, 5}}},
                          {{"a", "b", 1}, {"c", "d", 3}});
    auto fan = make_fan2d(two);
    CHECK(fan.cones.size() == 2);
    CHECK(fan.rank == 3);
    CHECK(fan.dim == 2);

    auto dup = make_graph({{"a", IntVector{1, 0, 0}}, {"b", IntVector{0, 1, 0}}}, {{"a", "b", 1}, {"b", "a", 2}});
    auto one = make_fan2d(dup);
    REQUIRE(one.cones.size() == 1);
    CHECK(one.cones[0].weight == 3);

    auto parallel = make_graph({{"a", IntVector{1, 1, 0}}, {"b", IntVector{-2, -2, 0}}}, {{"a", "b", 1}});
    try {
        make_fan2d(parallel);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParallelEndpoints);
    }

    CHECK(f_vector(TropicalGraph{}) == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("json round trip is lossless") {
    auto g = subdivided_plane();
    g.vertices[0].kind = VertexKind::Curve;
    g.vertices[3].kind = VertexKind::Infinity;
    g.vertices[4].kind = VertexKind::Exceptional;
    g.edges.push_back({"e3", "s", Rational(0), true});
    g.edges[1].weight = Rational(3, 2);
    g.vertices[1].point = IntVector(std::vector<Integer>{Integer("123456789012345678901234567890"), Integer(-1), Integer(0)});
    g.meta.delta = 2;
    g.meta.pipeline = "generic";
    g.meta.seed = 99;
    g.meta.forced = true;
    g.meta.notes["witness"] = "none";
    auto back = deserialize_graph(serialize(g, Format::Json));
    CHECK(back == g);
}

TEST_CASE("dot output marks zero edges") {
    auto g = make_graph({{"D6", IntVector{0, -1, -1}}, {"D7", IntVector{1, 0, 0}}}, {{"D6", "D7", 0}});
    std::string dot = serialize(g, Format::Dot);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.rfind("graph", 0) == 0);
    g.edges[0] = {"D6", "D7", Rational(1), false};
    CHECK(serialize(g, Format::Dot).find("style=dashed") == std::string::npos);
}

TEST_CASE("empty documents and unknown formats") {
    TropicalGraph empty;
    auto json_text = serialize(empty, Format::Json);
    CHECK(deserialize_graph(json_text) == empty);
    CHECK(serialize(empty, Format::Dot) == "graph tropical {\n}\n");
    std::string svg = serialize(empty, Format::Svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    WeightedFan fan;
    fan.rank = 3;
    fan.dim = 2;
    CHECK(deserialize_fan(serialize(fan, Format::Json)).cones.empty());
    CHECK(serialize(fan, Format::Svg).find("</svg>") != std::string::npos);
    try {
        parse_format("png");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownFormat);
    }
}

TEST_CASE("svg is deterministic for a seed") {
    auto g = subdivided_plane();
    CHECK(serialize(g, Format::Svg, 7) == serialize(g, Format::Svg, 7));
    CHECK(serialize(g, Format::Svg, 7).find("<circle") != std::string::npos);
}

TEST_CASE("fan json round trip and validation") {
    WeightedFan fan;
    fan.rank = 3;
    fan.dim = 2;
    fan.cones = {{{IntVector{1, 0, 0}, IntVector{0, 1, 0}}, 4}};
    fan.degenerate = {{{IntVector{1, 0, 0}, IntVector{2, 0, 0}}, "rank drop"}};
    auto back = deserialize_fan(serialize(fan, Format::Json));
    CHECK(back.cones.size() == 1);
    CHECK(back.cones[0].weight == 4);
    CHECK(back.cones[0].generators[1] == IntVector{0, 1, 0});
    CHECK(back.degenerate.size() == 1);
    CHECK_THROWS_AS(deserialize_fan(R"({"rank":3,"dim":2,"cones":[{"generators":[[1,0]],"weight":1}]})"), Error);
    CHECK_THROWS_AS(deserialize_fan("{not json"), Error);
}

}
