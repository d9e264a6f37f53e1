#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tropimpl/laurent.hpp"

namespace tropimpl {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 0x7e0a11u;

// Resultant eliminating variable `eliminate` (0 or 1), normalized as lc(g)^deg f * prod f(roots of g).
UPoly resultant(const BiPoly& f, const BiPoly& g, std::size_t eliminate);
// Sylvester determinant for coefficient lists in the eliminated variable: lc(f)^deg g * prod g(roots of f).
UPoly sylvester_resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g);

// Common points x in a transformed chart sharing one minimal polynomial.
struct PointGroup {
    UPoly minpoly;                // squarefree, monic
    UPoly y;                      // second transformed coordinate as a function of x, mod minpoly
    int multiplicity = 0;         // intersection multiplicity at each point of the group
    std::array<UPoly, 3> coords;  // original homogeneous coordinates mod minpoly
};

struct CurveIntersection {
    IntMatrix transform;  // original coordinates = transform * (x, y, 1)
    std::vector<PointGroup> groups;

    long total() const;
    int multiplicity_at(const ProjPoint& p) const;
    // Rational common points with their multiplicities, in lexicographic order.
    std::vector<std::pair<ProjPoint, int>> rational_points() const;
};

// All common points of two plane curves without a common component.
CurveIntersection intersect_curves(const HomPoly& f, const HomPoly& g, Rng& rng);

// h evaluated on the points of a group, reduced modulo the minimal polynomial.
UPoly evaluate_on_group(const HomPoly& h, const PointGroup& group);

// Rational roots of r (a factor of group.minpoly) mapped back to projective points.
std::vector<ProjPoint> group_points(const PointGroup& group, const UPoly& factor);

int local_intersection(const HomPoly& f, const HomPoly& g, const ProjPoint& p, Rng& rng);
int local_intersection(const HomPoly& f, const HomPoly& g, const ProjPoint& p);

Integer torus_intersection_length(const LaurentPoly& f, const LaurentPoly& g, Rng& rng);
Integer torus_intersection_length(const LaurentPoly& f, const LaurentPoly& g);

// Monic gcd of two polynomials in y whose coefficients live in Q[x]/(m), split along
// the factorization of m forced by zero divisors.
using YPoly = std::vector<UPoly>;
struct GcdBranch {
    UPoly modulus;
    YPoly gcd;  // monic, empty when both inputs vanish identically on the branch
};
std::vector<GcdBranch> gcd_over_quotient(const UPoly& m, const YPoly& a, const YPoly& b);

}  // namespace tropimpl
