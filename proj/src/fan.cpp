#include "tropimpl/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropimpl/error.hpp"
#include "tropimpl/polygon.hpp"

namespace tropimpl {

namespace {

IntVector plane_key(const IntVector& a, const IntVector& b) {
    std::vector<Integer> minors;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) minors.push_back(a[i] * b[j] - a[j] * b[i]);
    IntVector key = primitive_vector(IntVector(std::move(minors)));
    for (std::size_t i = 0; i < key.dim(); ++i) {
        if (key[i] == 0) continue;
        if (key[i] < 0) key = -key;
        break;
    }
    return key;
}

// Integer coordinates of vectors in a rank-2 sublattice basis.
class PlaneChart {
public:
    PlaneChart(const IntVector& a, const IntVector& b) {
        auto basis = saturation_basis({a, b});
        u_ = basis[0];
        v_ = basis[1];
        for (std::size_t i = 0; i < u_.dim() && d_ == 0; ++i)
            for (std::size_t j = i + 1; j < u_.dim() && d_ == 0; ++j) {
                d_ = u_[i] * v_[j] - u_[j] * v_[i];
                i_ = i;
                j_ = j;
            }
    }

    // Coordinates of r if r lies in the plane.
    bool coords(const IntVector& r, IntVector& out) const {
        Integer xn = r[i_] * v_[j_] - r[j_] * v_[i_];
        Integer yn = u_[i_] * r[j_] - u_[j_] * r[i_];
        if (xn % d_ != 0 || yn % d_ != 0) return false;
        Integer x = xn / d_, y = yn / d_;
        for (std::size_t k = 0; k < r.dim(); ++k)
            if (x * u_[k] + y * v_[k] != r[k]) return false;
        out = IntVector(std::vector<Integer>{x, y});
        return true;
    }

private:
    IntVector u_, v_;
    Integer d_ = 0;
    std::size_t i_ = 0, j_ = 1;
};

bool strictly_inside(const IntVector& r, const IntVector& p, const IntVector& q) {
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j) {
            Integer d = p[i] * q[j] - p[j] * q[i];
            if (d == 0) continue;
            Rational alpha(r[i] * q[j] - r[j] * q[i], d), beta(p[i] * r[j] - p[j] * r[i], d);
            alpha.canonicalize();
            beta.canonicalize();
            if (alpha <= 0 || beta <= 0) return false;
            for (std::size_t k = 0; k < p.dim(); ++k)
                if (alpha * p[k] + beta * q[k] != Rational(r[k])) return false;
            return true;
        }
    return false;
}

using RayPair = std::pair<IntVector, IntVector>;

RayPair ordered(const IntVector& a, const IntVector& b) { return a < b ? RayPair{a, b} : RayPair{b, a}; }

}  // namespace

bool in_open_cone(const IntVector& r, const IntVector& p, const IntVector& q) { return strictly_inside(r, p, q); }

std::vector<RayCone> refine_2d(const std::vector<RayCone>& cones, const std::vector<IntVector>& extra_rays) {
    std::set<IntVector> all_rays;
    for (const auto& c : cones) {
        all_rays.insert(primitive_vector(c.a));
        all_rays.insert(primitive_vector(c.b));
    }
    for (const auto& r : extra_rays)
        if (!r.is_zero()) all_rays.insert(primitive_vector(r));

    std::map<IntVector, std::vector<RayCone>> planes;
    for (const auto& c : cones) {
        if (rank_of({c.a, c.b}) < 2) throw Error(ErrorKind::ParallelEndpoints, "cone with parallel generators " + c.a.to_string() + ", " + c.b.to_string());
        planes[plane_key(c.a, c.b)].push_back({primitive_vector(c.a), primitive_vector(c.b), c.weight});
    }

    std::map<RayPair, Rational> sectors;
    for (const auto& [key, group] : planes) {
        PlaneChart chart(group[0].a, group[0].b);
        std::vector<std::pair<IntVector, IntVector>> in_plane;  // (2d coords, ray)
        for (const auto& r : all_rays) {
            IntVector c;
            if (chart.coords(r, c)) in_plane.emplace_back(c, r);
        }
        std::sort(in_plane.begin(), in_plane.end(), [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
        auto index_of = [&](const IntVector& r) {
            for (std::size_t i = 0; i < in_plane.size(); ++i)
                if (in_plane[i].second == r) return i;
            throw Error(ErrorKind::InvalidArgument, "ray missing from its plane");
        };
        for (const auto& c : group) {
            IntVector ca, cb;
            chart.coords(c.a, ca);
            chart.coords(c.b, cb);
            IntVector from = c.a, to = c.b;
            if (det2(ca, cb) < 0) std::swap(from, to);
            std::size_t k = index_of(from), end = index_of(to);
            while (k != end) {
                std::size_t next = (k + 1) % in_plane.size();
                sectors[ordered(in_plane[k].second, in_plane[next].second)] += c.weight;
                k = next;
            }
        }
    }
    std::vector<RayCone> out;
    for (const auto& [pair, w] : sectors)
        if (w != 0) out.push_back({pair.first, pair.second, w});
    return out;
}

WeightedFan canonical_fan(const WeightedFan& fan) {
    WeightedFan out;
    out.rank = fan.rank;
    out.dim = fan.dim;
    if (fan.dim == 2) {
        std::vector<RayCone> cones;
        for (const auto& c : fan.cones) cones.push_back({c.generators[0], c.generators[1], Rational(c.weight)});
        auto refined = refine_2d(cones);
        std::map<RayPair, Rational> current;
        for (const auto& c : refined) current[ordered(c.a, c.b)] += c.weight;
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<IntVector, std::vector<RayPair>> incident;
            for (const auto& [pr, w] : current) {
                incident[pr.first].push_back(pr);
                incident[pr.second].push_back(pr);
            }
            for (const auto& [ray, pairs] : incident) {
                if (pairs.size() != 2) continue;
                Rational w0 = current[pairs[0]], w1 = current[pairs[1]];
                if (w0 != w1) continue;
                IntVector p = pairs[0].first == ray ? pairs[0].second : pairs[0].first;
                IntVector q = pairs[1].first == ray ? pairs[1].second : pairs[1].first;
                if (rank_of({p, q}) < 2 || !strictly_inside(ray, p, q)) continue;
                current.erase(pairs[0]);
                current.erase(pairs[1]);
                current[ordered(p, q)] += w0;
                changed = true;
                break;
            }
        }
        for (const auto& [pr, w] : current) {
            if (w == 0) continue;
            if (w.get_den() != 1) throw Error(ErrorKind::NonIntegralWeight, "fractional cone weight " + w.get_str());
            out.cones.push_back({{pr.first, pr.second}, w.get_num()});
        }
        return out;
    }
    std::map<std::vector<IntVector>, Integer> merged;
    for (const auto& c : fan.cones) {
        std::vector<IntVector> gens;
        for (const auto& g : c.generators) gens.push_back(primitive_vector(g));
        std::sort(gens.begin(), gens.end());
        merged[gens] += c.weight;
    }
    for (const auto& [gens, w] : merged)
        if (w != 0) out.cones.push_back({gens, w});
    return out;
}

bool same_weighted_fan(const WeightedFan& a, const WeightedFan& b) {
    if (a.rank != b.rank || a.dim != b.dim) return false;
    auto ca = canonical_fan(a), cb = canonical_fan(b);
    if (ca.cones.size() != cb.cones.size()) return false;
    for (std::size_t i = 0; i < ca.cones.size(); ++i) {
        if (ca.cones[i].generators != cb.cones[i].generators || ca.cones[i].weight != cb.cones[i].weight) return false;
    }
    return true;
}

BalanceReport check_balanced(const WeightedFan& fan) {
    BalanceReport report;
    if (fan.dim != 2) throw Error(ErrorKind::DimensionMismatch, "balancing is checked on two-dimensional fans");
    std::vector<RayCone> cones;
    for (const auto& c : fan.cones) cones.push_back({c.generators[0], c.generators[1], Rational(c.weight)});
    auto refined = refine_2d(cones);
    std::map<IntVector, std::vector<std::pair<IntVector, Rational>>> incident;
    for (const auto& c : refined) {
        incident[c.a].emplace_back(c.b, c.weight);
        incident[c.b].emplace_back(c.a, c.weight);
    }
    for (const auto& [ray, others] : incident) {
        IntMatrix u = unimodular_to_e1(ray);
        std::vector<Rational> sum(ray.dim() - 1);
        for (const auto& [w, weight] : others) {
            IntVector image = u * w;
            IntVector cls(std::vector<Integer>(image.entries().begin() + 1, image.entries().end()));
            cls = primitive_vector(cls);
            for (std::size_t i = 0; i < cls.dim(); ++i) sum[i] += weight * cls[i];
        }
        bool zero = std::all_of(sum.begin(), sum.end(), [](const Rational& x) { return x == 0; });
        if (!zero) {
            report.balanced = false;
            IntVector residual(sum.size());
            for (std::size_t i = 0; i < sum.size(); ++i) residual[i] = sum[i].get_num() / sum[i].get_den();
            report.failures.push_back({ray, residual});
        }
    }
    return report;
}

}  // namespace tropimpl
