#pragma once

#include <vector>

#include "tropimpl/lattice.hpp"

namespace tropimpl {

struct LatticePolygon {
    std::vector<IntVector> vertices;  // counterclockwise
    int dim = 0;
};

LatticePolygon convex_hull(std::vector<IntVector> points);

// Angular order counterclockwise starting at direction (1,0).
bool angle_less(const IntVector& a, const IntVector& b);
void sort_by_angle(std::vector<IntVector>& rays);

std::vector<IntVector> inner_normal_rays(const LatticePolygon& p);

struct RefinedFan {
    std::vector<IntVector> rays;
};

RefinedFan common_refinement(const std::vector<LatticePolygon>& polygons);

// Vertices of the face minimizing <w, .>; one or two points.
std::vector<IntVector> face_in_direction(const LatticePolygon& p, const IntVector& w);
Integer lattice_length_of_face(const LatticePolygon& p, const IntVector& ray);

Integer twice_area(const LatticePolygon& p);
LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);
Integer mixed_volume(const LatticePolygon& p, const LatticePolygon& q);

}  // namespace tropimpl
