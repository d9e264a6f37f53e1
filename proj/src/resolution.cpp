#include "tropimpl/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tropimpl/error.hpp"

namespace tropimpl {

ProjArrangement make_arrangement(const std::vector<LaurentPoly>& polys) {
    ProjArrangement arr;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial f" + std::to_string(i + 1) + " is zero");
        if (polys[i].has_negative_exponent())
            throw Error(ErrorKind::NegativeExponent, "f" + std::to_string(i + 1) + " has negative exponents; clear denominators first");
        if (polys[i].total_degree() == 0) throw Error(ErrorKind::InvalidArgument, "f" + std::to_string(i + 1) + " is constant");
        arr.curves.push_back(homogenize(polys[i]));
        arr.degrees.push_back(polys[i].total_degree());
    }
    arr.line_at_infinity = line_at_infinity();
    return arr;
}

namespace {

// Chart (x, xv) renamed to (x, y), divided by x^m.
BiPoly chart_x(const BiPoly& p, long m) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[0] + e[1] - m, e[1]}, c);
    return out;
}

// Chart (wy, y) renamed to (x, y), divided by y^m.
BiPoly chart_y(const BiPoly& p, long m) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[0] + e[1] - m}, c);
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " / ") + p;
    return out;
}

UPoly power_of_linear(const Rational& a, int k) {
    UPoly out = UPoly::constant(1);
    UPoly lin = UPoly::x() - UPoly::constant(a);
    for (int i = 0; i < k; ++i) out = out * lin;
    return out;
}

std::vector<HomPoly> all_divisors(const ProjArrangement& arr) {
    std::vector<HomPoly> h = arr.curves;
    h.push_back(arr.line_at_infinity);
    return h;
}

std::vector<std::string> original_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("F" + std::to_string(i + 1));
    names.push_back("Finf");
    return names;
}

using PairMap = std::map<std::pair<std::size_t, std::size_t>, CurveIntersection>;

PairMap pairwise(const std::vector<HomPoly>& h, Rng& rng) {
    PairMap out;
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = a + 1; b < h.size(); ++b) out.emplace(std::pair{a, b}, intersect_curves(h[a], h[b], rng));
    return out;
}

std::vector<ProjPoint> excess_from(const std::vector<HomPoly>& h, const PairMap& pairs) {
    std::set<ProjPoint> found;
    for (const auto& [ab, inter] : pairs)
        for (const auto& grp : inter.groups)
            for (std::size_t c = 0; c < h.size(); ++c) {
                if (c == ab.first || c == ab.second) continue;
                UPoly common = gcd(grp.minpoly, evaluate_on_group(h[c], grp));
                if (common.degree() <= 0) continue;
                auto pts = group_points(grp, common);
                if (static_cast<long>(pts.size()) < common.degree())
                    throw Error(ErrorKind::IrrationalExcessPointSuspected,
                                "three boundary curves may meet at irrational points; resultant factor " + common.to_string());
                found.insert(pts.begin(), pts.end());
            }
    return {found.begin(), found.end()};
}

DivisorPair key_of(const std::string& a, const std::string& b) { return a < b ? DivisorPair{a, b} : DivisorPair{b, a}; }

}  // namespace

BlowupResult blow_up_local(const LocalCenter& center, const std::string& exceptional) {
    BlowupResult res;
    res.step.exceptional = exceptional;
    res.step.lineage = center.lineage;
    res.step.center = join(center.lineage);
    std::vector<LocalDivisor> divs;
    for (const auto& d : center.divisors) {
        long m = d.equation.order();
        if (d.equation.is_zero() || m == 0) continue;
        res.step.mult_per_divisor[d.name] = static_cast<int>(m);
        divs.push_back(d);
    }
    std::size_t k = divs.size();
    std::vector<BiPoly> px(k), py(k);
    std::vector<UPoly> irrational(k);
    std::map<Rational, std::vector<std::pair<std::size_t, int>>> finite;
    std::vector<std::pair<std::size_t, int>> at_infinity;
    for (std::size_t i = 0; i < k; ++i) {
        long m = res.step.mult_per_divisor[divs[i].name];
        px[i] = chart_x(divs[i].equation, m);
        py[i] = chart_y(divs[i].equation, m);
        UPoly r = px[i].restrict_zero(0);
        UPoly rest = r;
        for (const auto& a : rational_roots(r)) {
            int mult = root_multiplicity(r, a);
            finite[a].emplace_back(i, mult);
            rest = rest / power_of_linear(a, mult);
        }
        irrational[i] = rest;
        int inf = py[i].restrict_zero(1).order_at_zero();
        if (inf > 0) at_infinity.emplace_back(i, inf);
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            UPoly g = gcd(irrational[i], irrational[j]);
            if (g.degree() > 0)
                throw Error(ErrorKind::IrrationalExcessPointSuspected,
                            divs[i].name + " and " + divs[j].name + " meet " + exceptional + " at irrational points with minimal polynomial " + g.to_string());
        }
        if (irrational[i].degree() > 0) res.intersections[divs[i].name] += irrational[i].degree();
    }
    for (const auto& [a, members] : finite) {
        if (members.size() == 1) {
            res.intersections[divs[members[0].first].name] += members[0].second;
            continue;
        }
        LocalCenter child;
        child.lineage = center.lineage;
        child.lineage.push_back(exceptional + " chart (x, xv) at v=" + a.get_str());
        child.divisors.push_back({exceptional, bivar(1, 1, 0)});
        for (const auto& [i, mult] : members) child.divisors.push_back({divs[i].name, translate(px[i], 0, a)});
        res.excess.push_back(std::move(child));
    }
    if (at_infinity.size() == 1) {
        res.intersections[divs[at_infinity[0].first].name] += at_infinity[0].second;
    } else if (at_infinity.size() > 1) {
        LocalCenter child;
        child.lineage = center.lineage;
        child.lineage.push_back(exceptional + " chart (wy, y) at w=0");
        child.divisors.push_back({exceptional, bivar(1, 0, 1)});
        for (const auto& [i, mult] : at_infinity) child.divisors.push_back({divs[i].name, py[i]});
        res.excess.push_back(std::move(child));
    }
    return res;
}

BlowupResult blow_up_at(const ProjArrangement& arr, const ProjPoint& p, const std::string& exceptional) {
    auto h = all_divisors(arr);
    auto names = original_names(arr.curves.size());
    LocalCenter center;
    center.lineage.push_back(p.to_string());
    for (std::size_t i = 0; i < h.size(); ++i) {
        BiPoly local = local_equation(h[i], p);
        if (local.order() > 0) center.divisors.push_back({names[i], local});
    }
    auto res = blow_up_local(center, exceptional);
    res.step.center = p.to_string();
    return res;
}

std::vector<ProjPoint> find_excess_points(const ProjArrangement& arr, Rng& rng) {
    auto h = all_divisors(arr);
    return excess_from(h, pairwise(h, rng));
}

long ResolutionDiagram::coefficient(const std::string& original, const std::string& e) const {
    auto it = pullback.find({original, e});
    return it == pullback.end() ? 0 : it->second;
}

long ResolutionDiagram::intersection(const std::string& a, const std::string& b) const {
    auto it = intersection_table.find(key_of(a, b));
    return it == intersection_table.end() ? 0 : it->second;
}

std::vector<std::string> ResolutionDiagram::divisors() const {
    auto out = originals;
    out.insert(out.end(), exceptional.begin(), exceptional.end());
    return out;
}

ResolutionDiagram resolve_arrangement(const ProjArrangement& arr, const ResolutionOptions& options) {
    Rng rng(options.seed);
    auto h = all_divisors(arr);
    ResolutionDiagram d;
    d.originals = original_names(arr.curves.size());
    d.degrees = arr.degrees;
    d.degrees.push_back(1);

    auto pairs = pairwise(h, rng);
    auto excess = excess_from(h, pairs);
    std::set<ProjPoint> automatic(excess.begin(), excess.end());
    std::set<ProjPoint> all = automatic;
    all.insert(options.forced.begin(), options.forced.end());
    d.centers.assign(all.begin(), all.end());

    auto record = [&](BlowupResult& res) {
        const auto& e = res.step.exceptional;
        for (const auto& o : d.originals) {
            long b = 0;
            for (const auto& [name, m] : res.step.mult_per_divisor) b += (name == o ? 1 : d.coefficient(o, name)) * m;
            if (b != 0) d.pullback[{o, e}] = b;
        }
        for (const auto& [name, k] : res.intersections) d.intersection_table[key_of(e, name)] += k;
        d.steps.push_back(res.step);
        d.exceptional.push_back(e);
        if (d.steps.size() > options.max_steps)
            throw Error(ErrorKind::StepLimitExceeded, "resolution needs more than " + std::to_string(options.max_steps) + " blow-ups");
    };

    for (const auto& p : d.centers) {
        auto res = blow_up_at(arr, p, "E" + std::to_string(d.steps.size() + 1));
        if (!automatic.count(p)) {
            res.step.forced = true;
            d.forced = true;
        }
        std::deque<LocalCenter> queue(res.excess.begin(), res.excess.end());
        record(res);
        while (!queue.empty()) {
            auto child = blow_up_local(queue.front(), "E" + std::to_string(d.steps.size() + 1));
            queue.pop_front();
            queue.insert(queue.end(), child.excess.begin(), child.excess.end());
            record(child);
        }
    }

    for (const auto& [ab, inter] : pairs) {
        const auto &a = d.originals[ab.first], &b = d.originals[ab.second];
        long value = inter.total();
        for (const auto& c : d.centers) value -= inter.multiplicity_at(c);
        long upstairs = value;
        for (const auto& step : d.steps) {
            auto ia = step.mult_per_divisor.find(a), ib = step.mult_per_divisor.find(b);
            if (ia != step.mult_per_divisor.end() && ib != step.mult_per_divisor.end()) upstairs += static_cast<long>(ia->second) * ib->second;
        }
        if (upstairs != d.degrees[ab.first] * d.degrees[ab.second] || value < 0) d.noether_ok = false;
        if (value > 0) d.intersection_table[key_of(a, b)] = value;
    }
    for (auto it = d.intersection_table.begin(); it != d.intersection_table.end();) {
        if (it->second == 0) it = d.intersection_table.erase(it);
        else ++it;
    }
    for (const auto& [a, b] : options.crossings) {
        if (d.steps.size() >= options.max_steps)
            throw Error(ErrorKind::StepLimitExceeded, "resolution needs more than " + std::to_string(options.max_steps) + " blow-ups");
        d = blow_up_crossing(d, a, b);
    }
    return d;
}

ResolutionDiagram blow_up_crossing(const ResolutionDiagram& d, const std::string& a, const std::string& b) {
    auto names = d.divisors();
    for (const auto& x : {a, b})
        if (std::find(names.begin(), names.end(), x) == names.end()) throw Error(ErrorKind::InvalidArgument, "unknown divisor " + x);
    if (a == b || d.intersection(a, b) != 1)
        throw Error(ErrorKind::InvalidArgument, a + " and " + b + " do not meet in a single transverse point");
    ResolutionDiagram out = d;
    std::string e = "E" + std::to_string(d.steps.size() + 1);
    BlowupStep step{e, a + " x " + b, {}, {{a, 1}, {b, 1}}, true};
    for (const auto& o : d.originals) {
        long c = (a == o ? 1 : d.coefficient(o, a)) + (b == o ? 1 : d.coefficient(o, b));
        if (c != 0) out.pullback[{o, e}] = c;
    }
    out.intersection_table.erase(key_of(a, b));
    out.intersection_table[key_of(a, e)] = 1;
    out.intersection_table[key_of(b, e)] = 1;
    out.steps.push_back(step);
    out.exceptional.push_back(e);
    out.forced = true;
    return out;
}

std::map<std::string, long> character_divisor(const ResolutionDiagram& d, std::size_t i) {
    std::map<std::string, long> out;
    long deg = d.degrees.at(i);
    out[d.originals.at(i)] = 1;
    out["Finf"] = -deg;
    for (const auto& e : d.exceptional) out[e] = d.coefficient(d.originals[i], e) - deg * d.coefficient("Finf", e);
    return out;
}

IntVector divisor_point(const ResolutionDiagram& d, const std::string& name) {
    std::size_t n = d.originals.size() - 1;
    IntVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (name == d.originals[i]) p[i] = 1;
        else if (name == "Finf") p[i] = -d.degrees[i];
        else p[i] = d.coefficient(d.originals[i], name) - d.degrees[i] * d.coefficient("Finf", name);
    }
    return p;
}

TropicalGraph build_nongeneric_graph(const ResolutionDiagram& diagram, const Integer& delta) {
    if (delta < 1) throw Error(ErrorKind::InvalidArgument, "delta must be a positive integer");
    TropicalGraph g;
    g.meta.delta = delta;
    g.meta.pipeline = "nongeneric";
    g.meta.forced = diagram.forced;
    g.meta.notes["blowups"] = std::to_string(diagram.steps.size());
    std::string centers;
    for (const auto& c : diagram.centers) centers += c.to_string();
    g.meta.notes["centers"] = centers;

    auto names = diagram.divisors();
    std::map<std::string, IntVector> point;
    for (const auto& name : names) {
        point[name] = divisor_point(diagram, name);
        Vertex v{name, "", point[name], VertexKind::Exceptional};
        if (name == "Finf") {
            v.label = "[F_inf]";
            v.kind = VertexKind::Infinity;
        } else if (name[0] == 'F') {
            v.label = "e_" + name.substr(1);
            v.kind = VertexKind::Curve;
        } else {
            v.label = "[E_" + name.substr(1) + "]";
        }
        g.vertices.push_back(v);
    }
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            long i = diagram.intersection(names[a], names[b]);
            if (i == 0) continue;
            Rational w(Integer(i * gcd_minors2(point[names[a]], point[names[b]])), delta);
            w.canonicalize();
            if (w == 0) continue;
            if (w.get_den() != 1)
                throw Error(ErrorKind::NonIntegralWeight, "edge (" + names[a] + "," + names[b] + ") has non-integral weight " + w.get_str());
            g.edges.push_back({names[a], names[b], w, false});
        }
    return g;
}

SplitResult split_reducible(const GenericInput& input, std::size_t index, const std::vector<LaurentPoly>& factors) {
    std::size_t n = input.polys.size();
    if (index >= n) throw Error(ErrorKind::InvalidArgument, "no polynomial with index " + std::to_string(index + 1));
    if (factors.size() < 2) throw Error(ErrorKind::InvalidArgument, "a splitting needs at least two factors");
    BiPoly product(Rational(1));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].is_zero() || is_monomial(factors[k]))
            throw Error(ErrorKind::UnitFactor, "factor " + std::to_string(k + 1) + " is a unit");
        product = product * factors[k];
    }
    if (!(product == static_cast<const BiPoly&>(input.polys[index])))
        throw Error(ErrorKind::FactorMismatch, "declared factors do not multiply to f" + std::to_string(index + 1));
    SplitResult out;
    out.input = input;
    out.input.polys.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == index) out.input.polys.insert(out.input.polys.end(), factors.begin(), factors.end());
        else out.input.polys.push_back(input.polys[i]);
    }
    std::size_t extra = factors.size() - 1;
    out.beta = IntMatrix(n, n + extra);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < index) out.beta(i, i) = 1;
        else if (i == index)
            for (std::size_t k = 0; k <= extra; ++k) out.beta(i, i + k) = 1;
        else out.beta(i, i + extra) = 1;
    }
    return out;
}

}  // namespace tropimpl
