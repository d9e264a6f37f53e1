#include "tropimpl/polygon.hpp"

#include <algorithm>

#include "tropimpl/error.hpp"

namespace tropimpl {

namespace {

Integer cross(const IntVector& o, const IntVector& a, const IntVector& b) { return det2(a - o, b - o); }

int half(const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

}  // namespace

LatticePolygon convex_hull(std::vector<IntVector> points) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
    for (const auto& p : points)
        if (p.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "polygon points must be planar");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    LatticePolygon out;
    if (points.size() == 1) {
        out.vertices = points;
        out.dim = 0;
        return out;
    }
    std::vector<IntVector> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& p : points) {
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(points.begin(), points.end());
    }
    if (hull.size() <= 2) {
        out.vertices = {points.back(), points.front()};
        std::sort(out.vertices.begin(), out.vertices.end());
        out.dim = 1;
        return out;
    }
    out.vertices = std::move(hull);
    out.dim = 2;
    return out;
}

bool angle_less(const IntVector& a, const IntVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det2(a, b) > 0;
}

void sort_by_angle(std::vector<IntVector>& rays) { std::sort(rays.begin(), rays.end(), angle_less); }

std::vector<IntVector> inner_normal_rays(const LatticePolygon& p) {
    std::vector<IntVector> out;
    if (p.dim == 0) return out;
    auto normal = [](const IntVector& d) { return primitive_vector(IntVector(std::vector<Integer>{-d[1], d[0]})); };
    if (p.dim == 1) {
        IntVector n = normal(p.vertices[1] - p.vertices[0]);
        out.push_back(n);
        out.push_back(-n);
        return out;
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const auto& a = p.vertices[i];
        const auto& b = p.vertices[(i + 1) % p.vertices.size()];
        out.push_back(normal(b - a));
    }
    return out;
}

RefinedFan common_refinement(const std::vector<LatticePolygon>& polygons) {
    RefinedFan fan;
    for (const auto& p : polygons)
        for (auto& r : inner_normal_rays(p)) fan.rays.push_back(std::move(r));
    if (fan.rays.empty()) throw Error(ErrorKind::EmptyInput, "common refinement needs a polygon of positive dimension");
    std::sort(fan.rays.begin(), fan.rays.end());
    fan.rays.erase(std::unique(fan.rays.begin(), fan.rays.end()), fan.rays.end());
    sort_by_angle(fan.rays);
    return fan;
}

std::vector<IntVector> face_in_direction(const LatticePolygon& p, const IntVector& w) {
    std::vector<IntVector> face;
    Integer best;
    for (const auto& v : p.vertices) {
        Integer val = dot(v, w);
        if (face.empty() || val < best) {
            best = val;
            face = {v};
        } else if (val == best) {
            face.push_back(v);
        }
    }
    return face;
}

Integer lattice_length_of_face(const LatticePolygon& p, const IntVector& ray) {
    auto face = face_in_direction(p, ray);
    if (face.size() < 2) return 0;
    return content(face[1] - face[0]);
}

Integer twice_area(const LatticePolygon& p) {
    if (p.dim < 2) return 0;
    Integer s = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) s += det2(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()]);
    return abs(s);
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
    std::vector<IntVector> pts;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) pts.push_back(a + b);
    return convex_hull(std::move(pts));
}

Integer mixed_volume(const LatticePolygon& p, const LatticePolygon& q) {
    Integer twice = twice_area(minkowski_sum(p, q)) - twice_area(p) - twice_area(q);
    if (twice % 2 != 0) throw Error(ErrorKind::InvalidArgument, "odd doubled mixed volume");
    return twice / 2;
}

}  // namespace tropimpl
