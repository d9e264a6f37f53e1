#pragma once

#include <string>
#include <vector>

#include "tropimpl/fan.hpp"

namespace tropimpl {

struct BoundaryDivisor {
    std::string name;
    IntVector valuation;
};

struct BoundaryCell {
    std::vector<std::size_t> divisors;
    Integer intersection_number;
};

struct BoundaryComplexInput {
    std::size_t rank = 0;
    std::size_t dimension = 0;
    std::vector<BoundaryDivisor> divisors;
    std::vector<BoundaryCell> cells;
};

WeightedFan realize_weighted_complex(const BoundaryComplexInput& input);

// Push a weighted fan forward along the monomial map with matrix a (n x rank).
WeightedFan pushforward_fan(const WeightedFan& fan, const IntMatrix& a, const Integer& delta);

}  // namespace tropimpl
