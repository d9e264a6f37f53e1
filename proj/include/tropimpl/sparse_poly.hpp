#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tropimpl/error.hpp"
#include "tropimpl/lattice.hpp"
#include "tropimpl/upoly.hpp"

namespace tropimpl {

template <std::size_t N>
class SparsePoly {
public:
    using Exp = std::array<long, N>;
    using Terms = std::map<Exp, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c) { add_term(Exp{}, c); }
    SparsePoly(const Exp& e, const Rational& c) { add_term(e, c); }

    static SparsePoly variable(std::size_t i) {
        Exp e{};
        e[i] = 1;
        return SparsePoly(e, Rational(1));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exp& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long max_degree(std::size_t i) const {
        long d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] > d) d = e[i];
            first = false;
        }
        return d;
    }

    long min_degree(std::size_t i) const {
        long d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] < d) d = e[i];
            first = false;
        }
        return d;
    }

    // Lowest total degree of a term; -1 for the zero polynomial.
    long order() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (long x : e) s += x;
            if (d < 0 || s < d) d = s;
        }
        return d;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (long x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    bool has_negative_exponent() const {
        for (const auto& [e, c] : terms_)
            for (long x : e)
                if (x < 0) return true;
        return false;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
    friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly pow(unsigned k) const {
        SparsePoly out(Rational(1));
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    // Multiply by the monomial x^shift.
    SparsePoly shifted(const Exp& shift) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            Exp f;
            for (std::size_t i = 0; i < N; ++i) f[i] = e[i] + shift[i];
            out.terms_.emplace(f, c);
        }
        return out;
    }

    Rational evaluate(const std::array<Rational, N>& point) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] < 0) {
                    if (point[i] == 0) throw Error(ErrorKind::InvalidArgument, "negative power of zero");
                    Rational inv = 1 / point[i];
                    for (long k = 0; k < -e[i]; ++k) t *= inv;
                } else {
                    for (long k = 0; k < e[i]; ++k) t *= point[i];
                }
            }
            acc += t;
        }
        return acc;
    }

    // Replace each variable by a polynomial (nonnegative exponents only).
    template <std::size_t M>
    SparsePoly<M> substitute(const std::array<SparsePoly<M>, N>& images) const {
        std::array<std::vector<SparsePoly<M>>, N> powers;
        for (std::size_t i = 0; i < N; ++i) powers[i].push_back(SparsePoly<M>(Rational(1)));
        SparsePoly<M> out;
        for (const auto& [e, c] : terms_) {
            SparsePoly<M> t(c);
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] < 0) throw Error(ErrorKind::NegativeExponent, "substitution into a negative power");
                while (static_cast<long>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
                t = t * powers[i][e[i]];
            }
            out += t;
        }
        return out;
    }

    // Coefficients of powers of variable `var` as univariate polynomials in `other` (N = 2 only).
    std::vector<UPoly> coefficients_in(std::size_t var) const {
        static_assert(N == 2);
        std::size_t other = 1 - var;
        std::vector<std::vector<Rational>> dense;
        for (const auto& [e, c] : terms_) {
            if (e[0] < 0 || e[1] < 0) throw Error(ErrorKind::NegativeExponent, "negative exponent in polynomial view");
            std::size_t k = e[var], j = e[other];
            if (dense.size() <= k) dense.resize(k + 1);
            if (dense[k].size() <= j) dense[k].resize(j + 1);
            dense[k][j] += c;
        }
        std::vector<UPoly> out;
        for (auto& row : dense) out.emplace_back(std::move(row));
        return out;
    }

    // Restriction to variable `var` = 0 as a polynomial in the other variable (N = 2 only).
    UPoly restrict_zero(std::size_t var) const {
        auto cs = coefficients_in(var);
        return cs.empty() ? UPoly() : cs[0];
    }

    std::string to_string(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool constant = true;
            for (long x : e) constant = constant && x == 0;
            std::string mag = Rational(abs(c)).get_str();
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            std::string mono;
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (constant) out += mag;
            else if (abs(c) == 1) out += mono;
            else out += mag + "*" + mono;
        }
        return out;
    }

private:
    Terms terms_;
};

using BiPoly = SparsePoly<2>;
using TriPoly = SparsePoly<3>;

inline BiPoly bivar(const Rational& c, long a, long b) { return BiPoly(BiPoly::Exp{a, b}, c); }

}  // namespace tropimpl
