#include "tropimpl/generic.hpp"

#include <map>

#include "tropimpl/error.hpp"

namespace tropimpl {

using nlohmann::json;

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::TripleTorusPoint: return "triple-torus-point";
        case ViolationKind::BoundaryCollision: return "boundary-collision";
        case ViolationKind::RepeatedFactor: return "repeated-factor";
        case ViolationKind::MonomialFactor: return "monomial-factor";
        case ViolationKind::NonintegralWeight: return "nonintegral-weight";
    }
    return "unknown";
}

json certificate_to_json(const GenericityCertificate& cert) {
    auto list = [](const std::vector<Violation>& vs) {
        json a = json::array();
        for (const auto& v : vs) a.push_back({{"kind", to_string(v.kind)}, {"polynomials", v.polys}, {"witness", v.witness}});
        return a;
    };
    return {{"status", cert.accepted() ? "accepted" : "rejected"}, {"violations", list(cert.violations)}, {"warnings", list(cert.warnings)}};
}

namespace {

void validate(const GenericInput& input) {
    if (input.polys.empty()) throw Error(ErrorKind::EmptyInput, "no polynomials given");
    for (std::size_t i = 0; i < input.polys.size(); ++i)
        if (input.polys[i].is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial f" + std::to_string(i + 1) + " is zero");
    if (input.delta < 1) throw Error(ErrorKind::InvalidArgument, "delta must be a positive integer");
}

BiPoly derivative_t(const BiPoly& f) {
    BiPoly out;
    for (const auto& [e, c] : f.terms())
        if (e[1] != 0) out.add_term({e[0], e[1] - 1}, c * e[1]);
    return out;
}

std::string point_witness(const ProjPoint& p) {
    if (p[2] != 0) return "(s,t)=(" + p[0].get_str() + "," + p[1].get_str() + ")";
    return p.to_string();
}

// Points of a group lying in the torus and on h, as a factor of the minimal polynomial.
UPoly torus_part_on(const PointGroup& grp, const HomPoly& h) {
    UPoly common = gcd(grp.minpoly, evaluate_on_group(h, grp));
    if (common.degree() <= 0) return common;
    UPoly stu = mulmod(mulmod(grp.coords[0], grp.coords[1], common), grp.coords[2], common);
    return common / gcd(common, stu);
}

Integer gcd_except(const IntVector& v, std::size_t skip) {
    Integer g = 0;
    for (std::size_t j = 0; j < v.dim(); ++j)
        if (j != skip) g = gcd(g, v[j]);
    return g;
}

}  // namespace

bool is_squarefree(const BiPoly& f, Rng& rng) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree test of the zero polynomial");
    if (f.has_negative_exponent()) throw Error(ErrorKind::NegativeExponent, "squarefree test needs a polynomial");
    long d = f.total_degree();
    if (d <= 1) return true;
    long bound = 2;
    for (int attempt = 0; attempt < 64; ++attempt, bound *= 2) {
        long c = std::uniform_int_distribution<long>(-bound, bound)(rng);
        // leading coefficient in t after s -> s + c t is the top form at (c, 1)
        Rational lc = 0;
        for (const auto& [e, a] : f.terms()) {
            if (e[0] + e[1] != d) continue;
            Rational term = a;
            for (long k = 0; k < e[0]; ++k) term *= c;
            lc += term;
        }
        if (lc == 0) continue;
        BiPoly s = BiPoly::variable(0) + Rational(c) * BiPoly::variable(1);
        BiPoly g = f.substitute<2>({s, BiPoly::variable(1)});
        return !resultant(g, derivative_t(g), 1).is_zero();
    }
    throw Error(ErrorKind::RetryExhausted, "no admissible shear for the squarefree test");
}

GenericityCertificate certify_generic(const GenericInput& input) {
    validate(input);
    GenericityCertificate cert;
    Rng rng(input.options.seed);
    std::size_t n = input.polys.size();
    std::vector<LaurentPoly> stripped;
    std::vector<LatticePolygon> polygons;
    for (std::size_t i = 0; i < n; ++i) {
        std::array<long, 2> content{};
        stripped.push_back(strip_monomial(input.polys[i], &content));
        polygons.push_back(newton_polygon(input.polys[i]));
        if (content[0] != 0 || content[1] != 0)
            cert.warnings.push_back({ViolationKind::MonomialFactor, {i + 1},
                                     "monomial content s^" + std::to_string(content[0]) + "*t^" + std::to_string(content[1]) + " is a unit in the torus"});
        if (!is_monomial(stripped[i]) && !is_squarefree(stripped[i], rng))
            cert.violations.push_back({ViolationKind::RepeatedFactor, {i + 1}, "f" + std::to_string(i + 1) + " is not squarefree"});
    }

    bool any_dim = false;
    for (const auto& p : polygons) any_dim = any_dim || p.dim > 0;
    if (any_dim) {
        for (const auto& ray : common_refinement(polygons).rays)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (lattice_length_of_face(polygons[i], ray) == 0 || lattice_length_of_face(polygons[j], ray) == 0) continue;
                    UPoly g = gcd(initial_form(input.polys[i], ray), initial_form(input.polys[j], ray));
                    if (g.degree() > 0)
                        cert.violations.push_back({ViolationKind::BoundaryCollision, {i + 1, j + 1},
                                                   "initial forms along " + ray.to_string() + " share the factor " + g.to_string()});
                }
    }

    std::vector<HomPoly> homs;
    for (const auto& f : stripped) homs.push_back(homogenize(f));
    std::map<std::pair<std::size_t, std::size_t>, CurveIntersection> pair_points;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (is_monomial(stripped[i]) || is_monomial(stripped[j])) continue;
            try {
                pair_points.emplace(std::pair{i, j}, intersect_curves(homs[i], homs[j], rng));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::CommonFactor) throw;
                if (minkowski_sum(polygons[i], polygons[j]).dim == 2)
                    cert.violations.push_back({ViolationKind::RepeatedFactor, {i + 1, j + 1},
                                               "f" + std::to_string(i + 1) + " and f" + std::to_string(j + 1) + " share a factor"});
            }
        }

    for (const auto& [ij, inter] : pair_points)
        for (std::size_t k = ij.second + 1; k < n; ++k) {
            if (is_monomial(stripped[k])) continue;
            std::string witness;
            for (const auto& grp : inter.groups) {
                UPoly part = torus_part_on(grp, homs[k]);
                if (part.degree() <= 0) continue;
                auto points = group_points(grp, part);
                for (const auto& p : points) witness += (witness.empty() ? "" : " ") + point_witness(p);
                if (static_cast<long>(points.size()) < part.degree())
                    witness += (witness.empty() ? "" : " ") + std::string("irrational points with minimal polynomial ") + part.to_string();
            }
            if (!witness.empty()) cert.violations.push_back({ViolationKind::TripleTorusPoint, {ij.first + 1, ij.second + 1, k + 1}, witness});
        }
    return cert;
}

TropicalGraph build_generic_graph(const GenericInput& input, const GenericityCertificate* certificate) {
    validate(input);
    std::size_t n = input.polys.size();
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "the generic pipeline needs at least three polynomials");
    GenericityCertificate computed;
    if (!certificate) {
        computed = certify_generic(input);
        certificate = &computed;
    }
    const auto& opt = input.options;
    if (!certificate->accepted() && !opt.force)
        throw Error(ErrorKind::NotCertified, "input is not generic relative to its supports (" + std::string(to_string(certificate->violations[0].kind)) + ")");
    if (opt.use_mixed_volume && !certificate->accepted())
        throw Error(ErrorKind::InvalidArgument, "mixed volumes are only valid for certified inputs");

    Rng rng(opt.seed);
    std::vector<LatticePolygon> polygons;
    for (const auto& f : input.polys) polygons.push_back(newton_polygon(f));
    auto rays = common_refinement(polygons).rays;

    TropicalGraph g;
    g.meta.delta = input.delta;
    g.meta.pipeline = "generic";
    g.meta.seed = opt.seed;
    g.meta.forced = !certificate->accepted();
    std::string ray_list;
    for (const auto& r : rays) ray_list += r.to_string();
    g.meta.notes["rays"] = ray_list;

    std::vector<bool> has_curve(n);
    for (std::size_t i = 0; i < n; ++i) {
        has_curve[i] = polygons[i].dim != 0;
        if (has_curve[i]) g.vertices.push_back({"e" + std::to_string(i + 1), "e_" + std::to_string(i + 1), unit_vector(n, i), VertexKind::Curve});
    }
    std::vector<IntVector> div(rays.size(), IntVector(n));
    for (std::size_t k = 0; k < rays.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) div[k][i] = trop_eval(input.polys[i], rays[k]);
        if (!div[k].is_zero())
            g.vertices.push_back({"D" + std::to_string(k + 1), "[D_" + std::to_string(k + 1) + "]", div[k], VertexKind::Toric});
    }

    auto add_edge = [&](const std::string& u, const std::string& v, Rational w) {
        w.canonicalize();
        w /= Rational(input.delta);
        if (w == 0) {
            if (opt.keep_zero_edges) g.edges.push_back({u, v, w, true});
            return;
        }
        if (w.get_den() != 1)
            throw Error(ErrorKind::NonIntegralWeight, "edge (" + u + "," + v + ") has non-integral weight " + w.get_str());
        g.edges.push_back({u, v, w, false});
    };

    std::size_t m = rays.size();
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t k = (j + 1) % m;
        if (m == 2 && j == 1) break;
        if (div[j].is_zero() || div[k].is_zero()) continue;
        Integer det = abs(det2(rays[k], rays[j]));
        if (det == 0) continue;
        add_edge("D" + std::to_string(j + 1), "D" + std::to_string(k + 1), Rational(gcd_minors2(div[j], div[k]), det));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!has_curve[i]) continue;
        for (std::size_t k = 0; k < m; ++k) {
            if (div[k].is_zero()) continue;
            Integer len = lattice_length_of_face(polygons[i], rays[k]);
            if (len == 0) continue;
            add_edge("e" + std::to_string(i + 1), "D" + std::to_string(k + 1), Rational(len * gcd_except(div[k], i)));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!has_curve[i] || !has_curve[j]) continue;
            if (minkowski_sum(polygons[i], polygons[j]).dim != 2) continue;
            Integer w = opt.use_mixed_volume ? mixed_volume(polygons[i], polygons[j]) : torus_intersection_length(input.polys[i], input.polys[j], rng);
            add_edge("e" + std::to_string(i + 1), "e" + std::to_string(j + 1), Rational(w));
        }
    return g;
}

Integer count_preimages(const std::vector<LaurentPoly>& polys, Rng& rng) {
    std::size_t n = polys.size();
    std::size_t a = n, b = n;
    for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n && a == n; ++j)
            if (minkowski_sum(newton_polygon(polys[i]), newton_polygon(polys[j])).dim == 2) {
                a = i;
                b = j;
            }
    if (a == n) throw Error(ErrorKind::InvalidArgument, "no pair of polynomials with a two-dimensional Minkowski sum");
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rational s0 = pick(rng), t0 = pick(rng);
        if (s0 == 0 || t0 == 0) continue;
        std::vector<HomPoly> fibre(n);
        std::vector<bool> active(n, false);
        bool in_torus = true;
        for (std::size_t k = 0; k < n; ++k) {
            Rational y = polys[k].evaluate({s0, t0});
            if (y == 0) in_torus = false;
            BiPoly diff = polys[k] - BiPoly(y);
            if (diff.is_zero()) continue;
            fibre[k] = homogenize(strip_monomial(LaurentPoly(diff)));
            active[k] = true;
        }
        if (!in_torus) continue;
        CurveIntersection inter;
        try {
            inter = intersect_curves(fibre[a], fibre[b], rng);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CommonFactor) throw;
            continue;
        }
        Integer count = 0;
        for (const auto& grp : inter.groups) {
            UPoly common = grp.minpoly;
            for (std::size_t k = 0; k < n; ++k) {
                if (!active[k] || k == a || k == b) continue;
                common = gcd(common, evaluate_on_group(fibre[k], grp));
            }
            if (common.degree() <= 0) continue;
            UPoly stu = mulmod(mulmod(grp.coords[0], grp.coords[1], common), grp.coords[2], common);
            count += common.degree() - std::max(gcd(common, stu).degree(), 0);
        }
        return count;
    }
    throw Error(ErrorKind::RetryExhausted, "no torus target point found for the degree check");
}

}  // namespace tropimpl
