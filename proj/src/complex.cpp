#include "tropimpl/complex.hpp"

#include <algorithm>
#include <map>

#include "tropimpl/error.hpp"

namespace tropimpl {

WeightedFan realize_weighted_complex(const BoundaryComplexInput& input) {
    WeightedFan fan;
    fan.rank = input.rank;
    fan.dim = input.dimension;
    for (const auto& d : input.divisors)
        if (d.valuation.dim() != input.rank)
            throw Error(ErrorKind::DimensionMismatch, "valuation of " + d.name + " does not have dimension " + std::to_string(input.rank));
    for (std::size_t k = 0; k < input.cells.size(); ++k) {
        const auto& cell = input.cells[k];
        if (cell.divisors.size() != input.dimension)
            throw Error(ErrorKind::InconsistentCellSize, "cell " + std::to_string(k) + " has " + std::to_string(cell.divisors.size()) +
                                                             " divisors, expected " + std::to_string(input.dimension));
        if (cell.intersection_number < 0) throw Error(ErrorKind::InvalidArgument, "negative intersection number in cell " + std::to_string(k));
        std::vector<IntVector> gens;
        for (auto idx : cell.divisors) {
            if (idx >= input.divisors.size()) throw Error(ErrorKind::InvalidArgument, "cell " + std::to_string(k) + " refers to a missing divisor");
            gens.push_back(input.divisors[idx].valuation);
        }
        if (cell.intersection_number == 0) {
            fan.degenerate.push_back({gens, "zero intersection number"});
            continue;
        }
        Integer index = lattice_index(gens);
        if (index == 0) {
            fan.degenerate.push_back({gens, "rank drop"});
            continue;
        }
        fan.cones.push_back({gens, cell.intersection_number * index});
    }
    return fan;
}

namespace {

Integer integral(const Rational& w, const std::string& what) {
    if (w.get_den() != 1) throw Error(ErrorKind::NonIntegralWeight, "non-integral weight " + w.get_str() + " on " + what);
    return w.get_num();
}

}  // namespace

WeightedFan pushforward_fan(const WeightedFan& fan, const IntMatrix& a, const Integer& delta) {
    if (a.cols() != fan.rank) throw Error(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(a.cols()) + " columns, fan rank is " + std::to_string(fan.rank));
    if (delta <= 0) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    WeightedFan out;
    out.rank = a.rows();
    out.dim = fan.dim;

    struct Image {
        std::vector<IntVector> gens;
        Rational weight;
    };
    std::vector<Image> images;
    for (const auto& c : fan.cones) {
        std::vector<IntVector> gens;
        for (const auto& g : c.generators) gens.push_back(a * g);
        if (rank_of(gens) < fan.dim) {
            out.degenerate.push_back({gens, "rank drop under the monomial map"});
            continue;
        }
        std::vector<IntVector> basis_images;
        for (const auto& b : saturation_basis(c.generators)) basis_images.push_back(a * b);
        images.push_back({gens, Rational(c.weight * lattice_index(basis_images))});
    }

    // representative image vector for each primitive ray
    std::map<IntVector, IntVector> representative;
    for (const auto& im : images)
        for (const auto& g : im.gens) representative.try_emplace(primitive_vector(g), g);

    if (fan.dim == 2) {
        std::vector<RayCone> cones;
        for (const auto& im : images) cones.push_back({im.gens[0], im.gens[1], im.weight});
        for (const auto& c : refine_2d(cones)) {
            Rational w = c.weight / Rational(delta);
            std::vector<IntVector> gens{representative.at(c.a), representative.at(c.b)};
            out.cones.push_back({gens, integral(w, "cone " + gens[0].to_string() + "," + gens[1].to_string())});
        }
        return out;
    }

    std::map<std::vector<IntVector>, std::pair<std::vector<IntVector>, Rational>> merged;
    for (const auto& im : images) {
        std::vector<IntVector> key;
        for (const auto& g : im.gens) key.push_back(primitive_vector(g));
        std::sort(key.begin(), key.end());
        auto [it, inserted] = merged.try_emplace(key, im.gens, Rational(0));
        it->second.second += im.weight;
    }
    if (fan.dim >= 3) {
        for (auto it = merged.begin(); it != merged.end(); ++it)
            for (auto jt = std::next(it); jt != merged.end(); ++jt) {
                std::vector<IntVector> both = it->first;
                both.insert(both.end(), jt->first.begin(), jt->first.end());
                if (rank_of(both) == fan.dim)
                    throw Error(ErrorKind::NotRefinable, "image cones with a common linear span need a refinement in dimension " + std::to_string(fan.dim));
            }
    }
    for (const auto& [key, entry] : merged) {
        Rational w = entry.second / Rational(delta);
        out.cones.push_back({entry.first, integral(w, "image cone")});
    }
    return out;
}

}  // namespace tropimpl
