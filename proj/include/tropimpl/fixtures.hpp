#pragma once

#include <string>
#include <vector>

#include "tropimpl/generic.hpp"

namespace tropimpl::fixtures {

// Build a Laurent polynomial from (coefficient, s-exponent, t-exponent) triples.
LaurentPoly poly(std::initializer_list<std::tuple<Rational, long, long>> terms);

// Three polynomials whose supports have a nine-ray common refinement.
std::vector<LaurentPoly> nine_ray(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c);
std::vector<LaurentPoly> alpha(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c);
std::vector<LaurentPoly> lines_and_conic(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Coefficient choices that pass the genericity checks.
std::vector<LaurentPoly> nine_ray_generic();
std::vector<LaurentPoly> alpha_generic();
std::vector<LaurentPoly> lines_and_conic_generic();

// Special coefficients with excess boundary points.
std::vector<LaurentPoly> alpha_special();
std::vector<LaurentPoly> lines_and_conic_special();

GenericInput generic_input(std::vector<LaurentPoly> polys, std::uint64_t seed = kDefaultSeed);

}  // namespace tropimpl::fixtures
