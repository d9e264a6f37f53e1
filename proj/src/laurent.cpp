#include "tropimpl/laurent.hpp"

#include "tropimpl/error.hpp"

namespace tropimpl {

std::vector<IntVector> LaurentPoly::support() const {
    std::vector<IntVector> out;
    for (const auto& [e, c] : terms()) out.push_back(IntVector{e[0], e[1]});
    return out;
}

HomPoly::HomPoly(TriPoly poly, long degree) : poly_(std::move(poly)), degree_(degree) {
    for (const auto& [e, c] : poly_.terms())
        if (e[0] + e[1] + e[2] != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
            throw Error(ErrorKind::InvalidArgument, "term of wrong degree in homogeneous polynomial");
}

BiPoly HomPoly::dehomogenize(std::size_t chart) const {
    BiPoly out;
    for (const auto& [e, c] : poly_.terms()) {
        BiPoly::Exp f;
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != chart) f[k++] = e[i];
        out.add_term(f, c);
    }
    return out;
}

bool operator==(const HomPoly& a, const HomPoly& b) { return a.degree() == b.degree() && a.poly() == b.poly(); }

ProjPoint::ProjPoint(Rational s, Rational t, Rational u) : c_{std::move(s), std::move(t), std::move(u)} {
    std::size_t k = chart();
    Rational d = c_[k];
    for (auto& x : c_) x /= d;
}

std::size_t ProjPoint::chart() const {
    for (std::size_t i = 3; i-- > 0;)
        if (c_[i] != 0) return i;
    throw Error(ErrorKind::ZeroVector, "projective point with all coordinates zero");
}

std::string ProjPoint::to_string() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords() == b.coords(); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

LatticePolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of the zero polynomial");
    return convex_hull(f.support());
}

Integer trop_eval(const LaurentPoly& f, const IntVector& w) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "tropical evaluation of the zero polynomial");
    if (w.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "tropical evaluation needs a planar weight");
    Integer best;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Integer v = w[0] * e[0] + w[1] * e[1];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

HomPoly homogenize(const LaurentPoly& f) {
    if (f.has_negative_exponent()) {
        throw Error(ErrorKind::NegativeExponent, "homogenization needs nonnegative exponents; clear denominators by a monomial first");
    }
    long d = f.total_degree();
    if (d < 0) d = 0;
    TriPoly out;
    for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1], d - e[0] - e[1]}, c);
    return HomPoly(out, d);
}

HomPoly line_at_infinity() { return HomPoly(TriPoly::variable(2), 1); }

Rational evaluate(const HomPoly& f, const ProjPoint& p) { return f.poly().evaluate(p.coords()); }

BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) return f;
    BiPoly x = BiPoly::variable(0) + BiPoly(a);
    BiPoly y = BiPoly::variable(1) + BiPoly(b);
    return f.substitute<2>({x, y});
}

BiPoly local_equation(const HomPoly& f, const ProjPoint& p) {
    std::size_t k = p.chart();
    std::array<Rational, 2> affine;
    std::size_t j = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != k) affine[j++] = p[i];
    return translate(f.dehomogenize(k), affine[0], affine[1]);
}

int multiplicity_at(const HomPoly& f, const ProjPoint& p) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity of the zero polynomial");
    return static_cast<int>(local_equation(f, p).order());
}

LaurentPoly strip_monomial(const LaurentPoly& f, std::array<long, 2>* content) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monomial content of the zero polynomial");
    std::array<long, 2> m{f.min_degree(0), f.min_degree(1)};
    if (content) *content = m;
    return LaurentPoly(f.shifted({-m[0], -m[1]}), f.names());
}

bool is_monomial(const BiPoly& f) { return f.size() == 1; }

UPoly initial_form(const LaurentPoly& f, const IntVector& w) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "initial form of the zero polynomial");
    IntVector d = primitive_vector(IntVector(std::vector<Integer>{-w[1], w[0]}));
    auto face = face_in_direction(newton_polygon(f), w);
    if (face.size() < 2) return UPoly::constant(f.coeff({face[0][0].get_si(), face[0][1].get_si()}));
    IntVector a = face[0], b = face[1];
    if (dot(b - a, d) < 0) std::swap(a, b);
    Integer len = content(b - a);
    std::vector<Rational> coeffs(len.get_ui() + 1);
    for (unsigned long k = 0; k < coeffs.size(); ++k) {
        IntVector p = a + Integer(k) * d;
        coeffs[k] = f.coeff({p[0].get_si(), p[1].get_si()});
    }
    return UPoly(std::move(coeffs));
}

}  // namespace tropimpl
