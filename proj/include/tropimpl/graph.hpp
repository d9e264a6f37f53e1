#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropimpl/fan.hpp"

namespace tropimpl {

enum class VertexKind { Curve, Toric, Infinity, Exceptional };

const char* to_string(VertexKind kind);
VertexKind parse_vertex_kind(const std::string& text);

struct Vertex {
    std::string id;
    std::string label;
    IntVector point;
    VertexKind kind = VertexKind::Toric;
};

struct Edge {
    std::string u, v;
    Rational weight;
    bool zero = false;
};

struct GraphMeta {
    Integer delta = 1;
    std::string pipeline;
    std::uint64_t seed = 0;
    bool forced = false;
    std::map<std::string, std::string> notes;
};

struct TropicalGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    GraphMeta meta;

    const Vertex* find(const std::string& id) const;
    const Vertex* find_point(const IntVector& point) const;
    // Weight of the edge joining the vertices with these points (0 if absent).
    Rational weight_between(const IntVector& p, const IntVector& q) const;
};

bool operator==(const TropicalGraph& a, const TropicalGraph& b);

TropicalGraph merge_realized(const TropicalGraph& g);

// Merge vertices on a common ray and subdivide coplanar overlapping edges at the
// vertices they pass through, summing weights of coinciding pieces.
TropicalGraph refine_overlaps(const TropicalGraph& g);

TropicalGraph suppress_bivalent(const TropicalGraph& g);

// merge_realized, refine_overlaps, then optionally suppress_bivalent.
TropicalGraph realize(const TropicalGraph& g, bool suppress);

WeightedFan make_fan2d(const TropicalGraph& g);

std::pair<std::size_t, std::size_t> f_vector(const TropicalGraph& g);

}  // namespace tropimpl
