#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropimpl/graph.hpp"
#include "tropimpl/intersection.hpp"

namespace tropimpl {

struct GenericOptions {
    bool keep_zero_edges = true;
    bool use_mixed_volume = false;
    bool force = false;
    std::uint64_t seed = kDefaultSeed;
};

struct GenericInput {
    std::vector<LaurentPoly> polys;
    Integer delta = 1;
    GenericOptions options;
};

enum class ViolationKind { TripleTorusPoint, BoundaryCollision, RepeatedFactor, MonomialFactor, NonintegralWeight };

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> polys;  // 1-based indices of the polynomials involved
    std::string witness;
};

struct GenericityCertificate {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool accepted() const { return violations.empty(); }
};

nlohmann::json certificate_to_json(const GenericityCertificate& cert);

// Squarefree test over Q for a polynomial with nonnegative exponents.
bool is_squarefree(const BiPoly& f, Rng& rng);

GenericityCertificate certify_generic(const GenericInput& input);

// Refuses rejected inputs unless options.force is set; pass a certificate to avoid recomputing it.
TropicalGraph build_generic_graph(const GenericInput& input, const GenericityCertificate* certificate = nullptr);

// Torus points of the fibre through f(p) for a random torus point p.
Integer count_preimages(const std::vector<LaurentPoly>& polys, Rng& rng);

}  // namespace tropimpl
