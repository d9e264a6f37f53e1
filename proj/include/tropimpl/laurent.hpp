#pragma once

#include <array>
#include <string>

#include "tropimpl/polygon.hpp"
#include "tropimpl/sparse_poly.hpp"

namespace tropimpl {

class LaurentPoly : public BiPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(BiPoly p, std::array<std::string, 2> names = {"s", "t"})
        : BiPoly(std::move(p)), names_(std::move(names)) {}

    const std::array<std::string, 2>& names() const { return names_; }
    std::string to_string() const { return BiPoly::to_string(names_); }
    std::vector<IntVector> support() const;

private:
    std::array<std::string, 2> names_{"s", "t"};
};

// Ternary form in (s, t, u).
class HomPoly {
public:
    HomPoly() = default;
    HomPoly(TriPoly poly, long degree);

    const TriPoly& poly() const { return poly_; }
    long degree() const { return degree_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Coordinate `chart` set to 1; the other two keep their order.
    BiPoly dehomogenize(std::size_t chart) const;
    std::string to_string() const { return poly_.to_string({"s", "t", "u"}); }

private:
    TriPoly poly_;
    long degree_ = 0;
};

bool operator==(const HomPoly& a, const HomPoly& b);

class ProjPoint {
public:
    ProjPoint(Rational s, Rational t, Rational u);
    const std::array<Rational, 3>& coords() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    // Index of the last nonzero coordinate (equal to 1 after normalization).
    std::size_t chart() const;
    std::string to_string() const;

private:
    std::array<Rational, 3> c_;
};

bool operator==(const ProjPoint& a, const ProjPoint& b);
inline bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
bool operator<(const ProjPoint& a, const ProjPoint& b);

LatticePolygon newton_polygon(const LaurentPoly& f);
Integer trop_eval(const LaurentPoly& f, const IntVector& w);
HomPoly homogenize(const LaurentPoly& f);
HomPoly line_at_infinity();
Rational evaluate(const HomPoly& f, const ProjPoint& p);

// Local equation of F in the affine chart of p with p moved to the origin.
BiPoly local_equation(const HomPoly& f, const ProjPoint& p);
int multiplicity_at(const HomPoly& f, const ProjPoint& p);

// f divided by its monomial content s^a t^b, so that min exponents are zero.
LaurentPoly strip_monomial(const LaurentPoly& f, std::array<long, 2>* content = nullptr);
bool is_monomial(const BiPoly& f);

// Initial form along w as a univariate polynomial in the primitive edge coordinate;
// degree equals the lattice length of the face.
UPoly initial_form(const LaurentPoly& f, const IntVector& w);

// Substitute an affine-linear translation x -> x + a, y -> y + b.
BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b);

}  // namespace tropimpl
