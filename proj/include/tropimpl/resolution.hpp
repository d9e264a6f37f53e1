#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropimpl/generic.hpp"

namespace tropimpl {

struct ProjArrangement {
    std::vector<HomPoly> curves;  // F_1..F_n
    HomPoly line_at_infinity;
    std::vector<long> degrees;
};

// Homogenize polynomial inputs; the curves must be pairwise without common factor.
ProjArrangement make_arrangement(const std::vector<LaurentPoly>& polys);

// Boundary divisor through the origin of a local chart, by its local equation.
struct LocalDivisor {
    std::string name;
    BiPoly equation;
};

struct LocalCenter {
    std::vector<LocalDivisor> divisors;
    std::vector<std::string> lineage;  // chart choices from the plane down to this point
};

struct BlowupStep {
    std::string exceptional;
    std::string center;  // projective point, or a chart location for infinitely near points
    std::vector<std::string> lineage;
    std::map<std::string, int> mult_per_divisor;
    bool forced = false;
};

struct BlowupResult {
    BlowupStep step;
    std::vector<LocalCenter> excess;           // points of the new divisor on >= 3 divisors
    std::map<std::string, long> intersections;  // new divisor against the others elsewhere
};

// Blow up the origin of a local chart. Strict transforms come from the charts
// (x, xv) and (wy, y) with the maximal exceptional power divided out.
BlowupResult blow_up_local(const LocalCenter& center, const std::string& exceptional);

// Blow up a point of the projective plane.
BlowupResult blow_up_at(const ProjArrangement& arr, const ProjPoint& p, const std::string& exceptional);

// Rational points of the plane on at least three of F_1..F_n, F_inf, in lexicographic order.
std::vector<ProjPoint> find_excess_points(const ProjArrangement& arr, Rng& rng);

struct ResolutionOptions {
    std::size_t max_steps = 64;
    std::vector<ProjPoint> forced;  // extra centers in the plane
    std::vector<std::pair<std::string, std::string>> crossings;  // extra blow-ups at transverse double points, applied last
    std::uint64_t seed = kDefaultSeed;
};

using DivisorPair = std::pair<std::string, std::string>;

struct ResolutionDiagram {
    std::vector<std::string> originals;  // F1..Fn, Finf
    std::vector<long> degrees;
    std::vector<ProjPoint> centers;  // plane centers in processing order
    std::vector<BlowupStep> steps;
    std::vector<std::string> exceptional;
    std::map<DivisorPair, long> pullback;  // (original, E_j) -> coefficient of E_j in the total transform
    std::map<DivisorPair, long> intersection_table;  // sorted names -> intersection number, zeros omitted
    bool noether_ok = true;
    bool forced = false;

    long coefficient(const std::string& original, const std::string& e) const;
    long intersection(const std::string& a, const std::string& b) const;
    std::vector<std::string> divisors() const;  // originals then exceptional
};

ResolutionDiagram resolve_arrangement(const ProjArrangement& arr, const ResolutionOptions& options = {});

// Blow up the single point where two boundary curves with intersection number one cross.
ResolutionDiagram blow_up_crossing(const ResolutionDiagram& d, const std::string& a, const std::string& b);

// Divisor of the character chi_i = f_i / u^deg f_i on the resolution.
std::map<std::string, long> character_divisor(const ResolutionDiagram& d, std::size_t i);

// Valuation vector of a final boundary divisor.
IntVector divisor_point(const ResolutionDiagram& d, const std::string& name);

TropicalGraph build_nongeneric_graph(const ResolutionDiagram& diagram, const Integer& delta);

struct SplitResult {
    GenericInput input;
    IntMatrix beta;
};

// Replace f_index (0-based) by the given factors; beta recombines the coordinates.
SplitResult split_reducible(const GenericInput& input, std::size_t index, const std::vector<LaurentPoly>& factors);

}  // namespace tropimpl
