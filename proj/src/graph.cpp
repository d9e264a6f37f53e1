#include "tropimpl/graph.hpp"

#include <algorithm>
#include <set>

#include "tropimpl/error.hpp"

namespace tropimpl {

const char* to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Curve: return "curve";
        case VertexKind::Toric: return "toric";
        case VertexKind::Infinity: return "infinity";
        case VertexKind::Exceptional: return "exceptional";
    }
    return "toric";
}

VertexKind parse_vertex_kind(const std::string& text) {
    if (text == "curve") return VertexKind::Curve;
    if (text == "toric") return VertexKind::Toric;
    if (text == "infinity") return VertexKind::Infinity;
    if (text == "exceptional") return VertexKind::Exceptional;
    throw Error(ErrorKind::ParseError, "unknown vertex kind '" + text + "'");
}

const Vertex* TropicalGraph::find(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const Vertex* TropicalGraph::find_point(const IntVector& point) const {
    for (const auto& v : vertices)
        if (v.point == point) return &v;
    return nullptr;
}

Rational TropicalGraph::weight_between(const IntVector& p, const IntVector& q) const {
    Rational w = 0;
    for (const auto& e : edges) {
        const Vertex* a = find(e.u);
        const Vertex* b = find(e.v);
        if (!a || !b) continue;
        if ((a->point == p && b->point == q) || (a->point == q && b->point == p)) w += e.weight;
    }
    return w;
}

bool operator==(const TropicalGraph& a, const TropicalGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        const auto &x = a.vertices[i], &y = b.vertices[i];
        if (x.id != y.id || x.label != y.label || x.point != y.point || x.kind != y.kind) return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto &x = a.edges[i], &y = b.edges[i];
        if (x.u != y.u || x.v != y.v || x.weight != y.weight || x.zero != y.zero) return false;
    }
    return a.meta.delta == b.meta.delta && a.meta.pipeline == b.meta.pipeline && a.meta.seed == b.meta.seed &&
           a.meta.forced == b.meta.forced && a.meta.notes == b.meta.notes;
}

namespace {

std::pair<std::string, std::string> key_of(const std::string& a, const std::string& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Regroup vertices by a key; edges are mapped and summed, loops and dropped endpoints removed.
template <typename KeyFn>
TropicalGraph regroup(const TropicalGraph& g, KeyFn key_fn) {
    TropicalGraph out;
    out.meta = g.meta;
    std::map<IntVector, std::size_t> slot;
    std::map<std::string, std::size_t> vertex_slot;
    for (const auto& v : g.vertices) {
        if (v.point.is_zero()) continue;
        IntVector key = key_fn(v.point);
        auto [it, inserted] = slot.try_emplace(key, out.vertices.size());
        if (inserted) {
            out.vertices.push_back(v);
        } else {
            auto& w = out.vertices[it->second];
            w.id += "=" + v.id;
            w.label += "=" + v.label;
        }
        vertex_slot[v.id] = it->second;
    }
    std::map<std::pair<std::string, std::string>, std::size_t> edge_slot;
    for (const auto& e : g.edges) {
        if (e.zero || e.weight == 0) continue;
        auto iu = vertex_slot.find(e.u), iv = vertex_slot.find(e.v);
        if (iu == vertex_slot.end() || iv == vertex_slot.end() || iu->second == iv->second) continue;
        const std::string& u = out.vertices[iu->second].id;
        const std::string& v = out.vertices[iv->second].id;
        auto [it, inserted] = edge_slot.try_emplace(key_of(u, v), out.edges.size());
        if (inserted) out.edges.push_back({u, v, e.weight, false});
        else out.edges[it->second].weight += e.weight;
    }
    return out;
}

}  // namespace

TropicalGraph merge_realized(const TropicalGraph& g) {
    return regroup(g, [](const IntVector& p) { return p; });
}

TropicalGraph refine_overlaps(const TropicalGraph& g) {
    TropicalGraph grouped = regroup(g, [](const IntVector& p) { return primitive_vector(p); });
    std::map<IntVector, std::string> by_ray;
    std::vector<IntVector> rays;
    for (const auto& v : grouped.vertices) {
        by_ray.emplace(primitive_vector(v.point), v.id);
        rays.push_back(v.point);
    }
    std::vector<RayCone> cones;
    for (const auto& e : grouped.edges) cones.push_back({grouped.find(e.u)->point, grouped.find(e.v)->point, e.weight});
    TropicalGraph out;
    out.meta = grouped.meta;
    out.vertices = grouped.vertices;
    for (const auto& c : refine_2d(cones, rays)) out.edges.push_back({by_ray.at(c.a), by_ray.at(c.b), c.weight, false});
    return out;
}

TropicalGraph suppress_bivalent(const TropicalGraph& g) {
    TropicalGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t vi = 0; vi < cur.vertices.size() && !changed; ++vi) {
            const Vertex& v = cur.vertices[vi];
            std::vector<std::size_t> inc;
            for (std::size_t k = 0; k < cur.edges.size(); ++k)
                if (cur.edges[k].u == v.id || cur.edges[k].v == v.id) inc.push_back(k);
            if (inc.size() != 2) continue;
            const Edge &e0 = cur.edges[inc[0]], &e1 = cur.edges[inc[1]];
            if (e0.zero || e1.zero || e0.weight != e1.weight || e0.weight <= 0) continue;
            std::string a = e0.u == v.id ? e0.v : e0.u;
            std::string b = e1.u == v.id ? e1.v : e1.u;
            if (a == b) continue;
            const IntVector& pa = cur.find(a)->point;
            const IntVector& pb = cur.find(b)->point;
            if (rank_of({pa, pb}) < 2 || !in_open_cone(v.point, pa, pb)) continue;
            Rational w = e0.weight;
            std::string removed = v.id;
            std::vector<Edge> edges;
            bool fused = false;
            for (std::size_t k = 0; k < cur.edges.size(); ++k) {
                if (k == inc[0] || k == inc[1]) continue;
                Edge e = cur.edges[k];
                if (key_of(e.u, e.v) == key_of(a, b)) {
                    e.weight += w;
                    fused = true;
                }
                edges.push_back(e);
            }
            if (!fused) edges.push_back({a, b, w, false});
            cur.edges = std::move(edges);
            cur.vertices.erase(cur.vertices.begin() + static_cast<long>(vi));
            changed = true;
        }
    }
    return cur;
}

TropicalGraph realize(const TropicalGraph& g, bool suppress) {
    TropicalGraph r = refine_overlaps(merge_realized(g));
    return suppress ? suppress_bivalent(r) : r;
}

WeightedFan make_fan2d(const TropicalGraph& g) {
    WeightedFan fan;
    fan.dim = 2;
    std::map<IntVector, IntVector> representative;
    std::vector<IntVector> rays;
    for (const auto& v : g.vertices) {
        if (fan.rank == 0) fan.rank = v.point.dim();
        if (v.point.is_zero()) continue;
        representative.try_emplace(primitive_vector(v.point), v.point);
        rays.push_back(v.point);
    }
    std::vector<RayCone> cones;
    for (const auto& e : g.edges) {
        if (e.zero || e.weight <= 0) continue;
        const Vertex* a = g.find(e.u);
        const Vertex* b = g.find(e.v);
        if (!a || !b) throw Error(ErrorKind::InvalidArgument, "edge " + e.u + "-" + e.v + " refers to a missing vertex");
        if (a->point.is_zero() || b->point.is_zero() || rank_of({a->point, b->point}) < 2)
            throw Error(ErrorKind::ParallelEndpoints, "positive edge " + e.u + "-" + e.v + " has parallel endpoints");
        cones.push_back({a->point, b->point, e.weight});
    }
    for (const auto& c : refine_2d(cones, rays)) {
        if (c.weight.get_den() != 1) throw Error(ErrorKind::NonIntegralWeight, "fractional weight " + c.weight.get_str());
        fan.cones.push_back({{representative.at(c.a), representative.at(c.b)}, c.weight.get_num()});
    }
    return fan;
}

std::pair<std::size_t, std::size_t> f_vector(const TropicalGraph& g) {
    TropicalGraph m = merge_realized(g);
    std::size_t e = 0;
    for (const auto& edge : m.edges)
        if (!edge.zero && edge.weight > 0) ++e;
    return {m.vertices.size(), e};
}

}  // namespace tropimpl
