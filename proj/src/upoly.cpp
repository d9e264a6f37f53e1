#include "tropimpl/upoly.hpp"

#include <algorithm>

#include "tropimpl/error.hpp"

namespace tropimpl {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    UPoly out(*this);
    Rational l = lead();
    for (auto& c : out.c_) c /= l;
    return out;
}

std::vector<Integer> UPoly::primitive_integer() const {
    Integer den = 1;
    for (const auto& c : c_) den = lcm(den, c.get_den());
    std::vector<Integer> out;
    out.reserve(c_.size());
    Integer g = 0;
    for (const auto& c : c_) {
        Integer v = c.get_num() * (den / c.get_den());
        g = gcd(g, v);
        out.push_back(v);
    }
    if (g == 0) return out;
    if (out.back() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

int UPoly::order_at_zero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        std::string mag = Rational(abs(c)).get_str();
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (i == 0) {
            out += mag;
            continue;
        }
        if (abs(c) != 1) out += mag + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs() == b.coeffs(); }

UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
UPoly operator-(const UPoly& a) { return Rational(-1) * a; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UPoly(std::move(out));
}

UPoly operator*(const Rational& s, UPoly a) { return a *= s; }

DivMod divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    Rational lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational t = r[k + db] / lb;
        q[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= t * b.coeffs()[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) {
    auto dm = divmod(a, b);
    if (!dm.remainder.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return dm.quotient;
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1;
    UPoly t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto dm = divmod(r0, r1);
        UPoly r2 = dm.remainder;
        UPoly s2 = s0 - dm.quotient * s1;
        UPoly t2 = t0 - dm.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
    Rational l = 1 / r0.lead();
    return {l * r0, l * s0, l * t0};
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() <= 0) return out;
    UPoly m = f.monic();
    UPoly d = m.derivative();
    UPoly a = gcd(m, d);
    UPoly b = m / a;
    UPoly c = d / a;
    UPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, e);
        b = b / g;
        c = e / g;
        e = c - b.derivative();
        if (g.degree() > 0) out.emplace_back(g, i);
        ++i;
    }
    return out;
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.is_zero() ? UPoly() : UPoly::constant(1);
    UPoly m = f.monic();
    return m / gcd(m, m.derivative());
}

namespace {

unsigned long mod_ui(const Integer& z, unsigned long p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

unsigned long eval_mod(const std::vector<unsigned long>& c, unsigned long x, unsigned long p) {
    unsigned long long acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
    return static_cast<unsigned long>(acc);
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& f) {
    std::vector<Rational> roots;
    if (f.degree() <= 0) return roots;
    UPoly g = squarefree_part(f);
    if (g.coeff(0) == 0) {
        roots.emplace_back(0);
        g = g / UPoly::x();
    }
    if (g.degree() == 1) {
        roots.push_back(-g.coeff(0) / g.coeff(1));
    } else if (g.degree() > 1) {
        std::vector<Integer> c = g.primitive_integer();
        std::vector<Integer> dc;
        for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned long>(i));
        const Integer& lc = c.back();
        Integer bound = 0;
        for (const auto& ci : c) bound = std::max(bound, Integer(abs(ci)));
        bound = 2 * (bound + abs(lc));

        bool solved = false;
        for (unsigned long p = 3; !solved; p += 2) {
            if (!is_prime(p)) continue;
            if (p > 2000000) throw Error(ErrorKind::RetryExhausted, "no suitable prime for root lifting");
            if (mod_ui(lc, p) == 0) continue;
            std::vector<unsigned long> cp, dp;
            for (const auto& ci : c) cp.push_back(mod_ui(ci, p));
            for (const auto& di : dc) dp.push_back(mod_ui(di, p));
            std::vector<unsigned long> modroots;
            bool good = true;
            for (unsigned long r = 0; r < p && good; ++r) {
                if (eval_mod(cp, r, p) != 0) continue;
                if (eval_mod(dp, r, p) == 0) good = false;
                modroots.push_back(r);
            }
            if (!good) continue;
            solved = true;
            Integer modulus = p;
            while (modulus <= bound) modulus *= p;
            for (unsigned long r0 : modroots) {
                Integer r = r0;
                for (int it = 0; it < 200 && eval_mod(c, r, modulus) != 0; ++it) {
                    Integer fv = eval_mod(c, r, modulus);
                    Integer dv = eval_mod(dc, r, modulus);
                    Integer inv;
                    mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), modulus.get_mpz_t());
                    r = r - fv * inv;
                    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
                }
                Integer z = lc * r;
                mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
                if (2 * z > modulus) z -= modulus;
                Rational q(z, lc);
                q.canonicalize();
                if (g(q) == 0) roots.push_back(q);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int root_multiplicity(const UPoly& f, const Rational& r) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root multiplicity in the zero polynomial");
    UPoly lin(std::vector<Rational>{-r, 1});
    UPoly g = f;
    int m = 0;
    while (true) {
        auto dm = divmod(g, lin);
        if (!dm.remainder.is_zero()) return m;
        g = dm.quotient;
        ++m;
    }
}

UPoly compose(const UPoly& f, const UPoly& g) {
    UPoly acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * g + UPoly::constant(f.coeff(i));
    return acc;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly invmod(const UPoly& a, const UPoly& m) {
    auto e = extended_gcd(a % m, m);
    if (e.g.degree() != 0) return {};
    return e.s % m;
}

}  // namespace tropimpl
