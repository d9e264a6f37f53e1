#include "tropimpl/intersection.hpp"

#include <algorithm>

#include "tropimpl/error.hpp"

namespace tropimpl {

namespace {

UPoly upow(const UPoly& p, int k) {
    UPoly out = UPoly::constant(1);
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly reduce(const YPoly& p, const UPoly& m) {
    YPoly out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c % m);
    trim(out);
    return out;
}

void make_monic(const UPoly& m, YPoly a, std::vector<GcdBranch>& out) {
    a = reduce(a, m);
    if (a.empty()) {
        out.push_back({m, {}});
        return;
    }
    UPoly g = gcd(a.back(), m);
    if (g.degree() > 0) {
        make_monic(g, a, out);
        make_monic(m / g, a, out);
        return;
    }
    UPoly inv = invmod(a.back(), m);
    for (auto& c : a) c = mulmod(c, inv, m);
    out.push_back({m, std::move(a)});
}

void d5_gcd(const UPoly& m, YPoly a, YPoly b, std::vector<GcdBranch>& out) {
    a = reduce(a, m);
    b = reduce(b, m);
    while (true) {
        if (b.empty()) {
            make_monic(m, std::move(a), out);
            return;
        }
        UPoly g = gcd(b.back(), m);
        if (g.degree() > 0) {
            d5_gcd(g, a, b, out);
            d5_gcd(m / g, a, b, out);
            return;
        }
        UPoly inv = invmod(b.back(), m);
        while (!a.empty() && a.size() >= b.size()) {
            UPoly q = mulmod(a.back(), inv, m);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] - q * b[i]) % m;
            a.back() = UPoly();
            trim(a);
        }
        std::swap(a, b);
    }
}

TriPoly linear_form(const IntMatrix& m, std::size_t row) {
    TriPoly out;
    for (std::size_t j = 0; j < 3; ++j) {
        TriPoly::Exp e{};
        e[j] = 1;
        out.add_term(e, Rational(m(row, j)));
    }
    return out;
}

HomPoly transform(const HomPoly& f, const IntMatrix& m) {
    std::array<TriPoly, 3> images{linear_form(m, 0), linear_form(m, 1), linear_form(m, 2)};
    return HomPoly(f.poly().substitute<3>(images), f.degree());
}

Integer det3(const IntMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

IntMatrix adjugate3(const IntMatrix& m) {
    IntMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    return a;
}

// f(s, 1, 0) for a binary form given as the restriction of a ternary form to u = 0.
UPoly binary_at_infinity(const HomPoly& f) {
    std::vector<Rational> c(f.degree() + 1);
    for (const auto& [e, v] : f.poly().terms())
        if (e[2] == 0) c[e[0]] += v;
    return UPoly(std::move(c));
}

// A monic H over Q[x]/(m) equal to (y - root)^d; false when H has distinct roots.
bool single_root(const GcdBranch& br, UPoly& root) {
    const YPoly& h = br.gcd;
    if (h.size() < 2) return false;
    long d = static_cast<long>(h.size()) - 1;
    root = (Rational(-1, d) * h[d - 1]) % br.modulus;
    YPoly expected{UPoly::constant(1)};
    UPoly minus_root = -root;
    for (long k = 0; k < d; ++k) {
        YPoly next(expected.size() + 1);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            next[i + 1] += expected[i];
            next[i] += mulmod(expected[i], minus_root, br.modulus);
        }
        expected = std::move(next);
    }
    for (long i = 0; i <= d; ++i)
        if ((expected[i] - h[i]) % br.modulus != UPoly()) return false;
    return true;
}

}  // namespace

UPoly sylvester_resultant(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
    YPoly a = f, b = g;
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m == 0 && n == 0) throw Error(ErrorKind::BothConstant, "both polynomials are constant in the elimination variable");
    if (m == 0) return upow(a[0], n);
    if (n == 0) return upow(b[0], m);
    int size = m + n;
    std::vector<std::vector<UPoly>> mat(size, std::vector<UPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) mat[i][i + k] = a[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) mat[n + i][i + k] = b[n - k];
    UPoly prev = UPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int r = k + 1;
            while (r < size && mat[r][k].is_zero()) ++r;
            if (r == size) return {};
            std::swap(mat[k], mat[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) mat[i][j] = (mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j]) / prev;
            mat[i][k] = UPoly();
        }
        prev = mat[k][k];
    }
    UPoly det = mat[size - 1][size - 1];
    return sign > 0 ? det : -det;
}

UPoly resultant(const BiPoly& f, const BiPoly& g, std::size_t eliminate) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
    return sylvester_resultant(g.coefficients_in(eliminate), f.coefficients_in(eliminate));
}

std::vector<GcdBranch> gcd_over_quotient(const UPoly& m, const YPoly& a, const YPoly& b) {
    std::vector<GcdBranch> out;
    d5_gcd(m.monic(), a, b, out);
    return out;
}

long CurveIntersection::total() const {
    long s = 0;
    for (const auto& g : groups) s += static_cast<long>(g.minpoly.degree()) * g.multiplicity;
    return s;
}

int CurveIntersection::multiplicity_at(const ProjPoint& p) const {
    IntMatrix adj = adjugate3(transform);
    std::array<Rational, 3> q;
    for (std::size_t i = 0; i < 3; ++i) {
        q[i] = 0;
        for (std::size_t j = 0; j < 3; ++j) q[i] += Rational(adj(i, j)) * p[j];
    }
    if (q[2] == 0) return 0;
    Rational x = q[0] / q[2], y = q[1] / q[2];
    for (const auto& g : groups)
        if (g.minpoly(x) == 0 && g.y(x) == y) return g.multiplicity;
    return 0;
}

std::vector<ProjPoint> group_points(const PointGroup& group, const UPoly& factor) {
    std::vector<ProjPoint> out;
    for (const auto& x : rational_roots(factor))
        out.emplace_back(group.coords[0](x), group.coords[1](x), group.coords[2](x));
    return out;
}

std::vector<std::pair<ProjPoint, int>> CurveIntersection::rational_points() const {
    std::vector<std::pair<ProjPoint, int>> out;
    for (const auto& g : groups)
        for (auto& p : group_points(g, g.minpoly)) out.emplace_back(std::move(p), g.multiplicity);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

UPoly evaluate_on_group(const HomPoly& h, const PointGroup& group) {
    const UPoly& m = group.minpoly;
    std::array<std::vector<UPoly>, 3> powers;
    for (std::size_t i = 0; i < 3; ++i) powers[i].push_back(UPoly::constant(1));
    UPoly acc;
    for (const auto& [e, c] : h.poly().terms()) {
        UPoly t = UPoly::constant(c);
        for (std::size_t i = 0; i < 3; ++i) {
            while (static_cast<long>(powers[i].size()) <= e[i]) powers[i].push_back(mulmod(powers[i].back(), group.coords[i], m));
            t = mulmod(t, powers[i][e[i]], m);
        }
        acc += t;
    }
    return acc % m;
}

CurveIntersection intersect_curves(const HomPoly& f, const HomPoly& g, Rng& rng) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "intersection with the zero polynomial");
    CurveIntersection result;
    if (f.degree() == 0 || g.degree() == 0) {
        result.transform = IntMatrix::identity(3);
        return result;
    }
    const long expected = f.degree() * g.degree();
    for (int attempt = 0; attempt < 64; ++attempt) {
        long bound = 2 + attempt / 4;
        std::uniform_int_distribution<long> dist(-bound, bound);
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = dist(rng);
        if (det3(m) == 0) continue;
        HomPoly ft = transform(f, m), gt = transform(g, m);
        Rational lf = ft.poly().coeff({0, ft.degree(), 0}), lg = gt.poly().coeff({0, gt.degree(), 0});
        if (lf == 0 || lg == 0) continue;
        BiPoly fa = ft.dehomogenize(2), ga = gt.dehomogenize(2);
        YPoly fy = fa.coefficients_in(1), gy = ga.coefficients_in(1);
        UPoly r = sylvester_resultant(fy, gy);
        if (r.is_zero()) throw Error(ErrorKind::CommonFactor, "curves share a common component");
        UPoly af = binary_at_infinity(ft), ag = binary_at_infinity(gt);
        if (gcd(af, ag).degree() > 0) continue;
        if (af.degree() < ft.degree() && ag.degree() < gt.degree()) continue;
        if (r.degree() != expected) continue;

        std::vector<PointGroup> groups;
        bool injective = true;
        for (const auto& [factor, mult] : squarefree_decomposition(r)) {
            for (auto& br : gcd_over_quotient(factor, fy, gy)) {
                UPoly root;
                if (!single_root(br, root)) {
                    injective = false;
                    break;
                }
                PointGroup pg;
                pg.minpoly = br.modulus.monic();
                pg.y = root;
                pg.multiplicity = mult;
                for (std::size_t i = 0; i < 3; ++i) {
                    UPoly c = Rational(m(i, 0)) * UPoly::x() + Rational(m(i, 1)) * pg.y + UPoly::constant(Rational(m(i, 2)));
                    pg.coords[i] = c % pg.minpoly;
                }
                groups.push_back(std::move(pg));
            }
            if (!injective) break;
        }
        if (!injective) continue;
        result.transform = m;
        result.groups = std::move(groups);
        return result;
    }
    throw Error(ErrorKind::RetryExhausted, "no admissible projection found for curve intersection");
}

int local_intersection(const HomPoly& f, const HomPoly& g, const ProjPoint& p, Rng& rng) {
    if (evaluate(f, p) != 0 || evaluate(g, p) != 0) return 0;
    return intersect_curves(f, g, rng).multiplicity_at(p);
}

int local_intersection(const HomPoly& f, const HomPoly& g, const ProjPoint& p) {
    Rng rng(kDefaultSeed);
    return local_intersection(f, g, p, rng);
}

Integer torus_intersection_length(const LaurentPoly& f, const LaurentPoly& g, Rng& rng) {
    LaurentPoly fs = strip_monomial(f), gs = strip_monomial(g);
    if (is_monomial(fs) || is_monomial(gs)) return 0;
    auto inter = intersect_curves(homogenize(fs), homogenize(gs), rng);
    Integer total = 0;
    for (const auto& grp : inter.groups) {
        UPoly prod = mulmod(mulmod(grp.coords[0], grp.coords[1], grp.minpoly), grp.coords[2], grp.minpoly);
        UPoly boundary = gcd(prod, grp.minpoly);
        total += static_cast<long>(grp.minpoly.degree() - std::max(boundary.degree(), 0)) * grp.multiplicity;
    }
    return total;
}

Integer torus_intersection_length(const LaurentPoly& f, const LaurentPoly& g) {
    Rng rng(kDefaultSeed);
    return torus_intersection_length(f, g, rng);
}

}  // namespace tropimpl
