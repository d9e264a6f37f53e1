#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropimpl/lattice.hpp"

namespace tropimpl {

// Dense univariate polynomial over Q; coefficient i belongs to x^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);
    static UPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    // Integer coefficients with content 1 and positive leading coefficient.
    std::vector<Integer> primitive_integer() const;
    // Lowest-order x-power dividing the polynomial (zero polynomial returns -1).
    int order_at_zero() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& s);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

bool operator==(const UPoly& a, const UPoly& b);
inline bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
UPoly operator+(UPoly a, const UPoly& b);
UPoly operator-(UPoly a, const UPoly& b);
UPoly operator-(const UPoly& a);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rational& s, UPoly a);

struct DivMod {
    UPoly quotient;
    UPoly remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);  // throws unless exact
UPoly operator%(const UPoly& a, const UPoly& b);

// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
    UPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

// Monic squarefree factors with their multiplicities (Yun); constants omitted.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
UPoly squarefree_part(const UPoly& f);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& f);
int root_multiplicity(const UPoly& f, const Rational& r);

// Composition f(g).
UPoly compose(const UPoly& f, const UPoly& g);

// Arithmetic in Q[x]/(m).
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
// Inverse of a modulo m, or the zero polynomial when gcd(a, m) != 1.
UPoly invmod(const UPoly& a, const UPoly& m);

}  // namespace tropimpl
