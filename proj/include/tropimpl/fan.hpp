#pragma once

#include <string>
#include <vector>

#include "tropimpl/lattice.hpp"

namespace tropimpl {

struct Cone {
    std::vector<IntVector> generators;
    Integer weight;
};

struct DegenerateCell {
    std::vector<IntVector> generators;
    std::string reason;
};

struct WeightedFan {
    std::size_t rank = 0;
    std::size_t dim = 0;
    std::vector<Cone> cones;
    std::vector<DegenerateCell> degenerate;
};

// Two-dimensional cone on primitive rays with a (possibly fractional) weight.
struct RayCone {
    IntVector a, b;
    Rational weight;
};

// Subdivide coplanar overlaps of 2-cones along every given ray lying inside them and
// sum weights of coinciding pieces. Rays of the cones themselves are always used.
std::vector<RayCone> refine_2d(const std::vector<RayCone>& cones, const std::vector<IntVector>& extra_rays = {});

// r = alpha p + beta q with alpha, beta > 0.
bool in_open_cone(const IntVector& r, const IntVector& p, const IntVector& q);

// Unique representation: primitive generators, coplanar overlaps refined, and
// unnecessary rays (straight, bivalent, equal weights) removed. Cones sorted.
WeightedFan canonical_fan(const WeightedFan& fan);
bool same_weighted_fan(const WeightedFan& a, const WeightedFan& b);

struct BalanceFailure {
    IntVector ray;
    IntVector residual;  // weighted sum of classes in Z^n / Z ray
};

struct BalanceReport {
    bool balanced = true;
    std::vector<BalanceFailure> failures;
};

BalanceReport check_balanced(const WeightedFan& fan);

}  // namespace tropimpl
