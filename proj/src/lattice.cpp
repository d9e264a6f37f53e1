#include "tropimpl/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tropimpl/error.hpp"

namespace tropimpl {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

IntVector::IntVector(std::initializer_list<long> entries) {
    entries_.reserve(entries.size());
    for (long e : entries) entries_.emplace_back(e);
}

bool IntVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& z) { return z == 0; });
}

IntVector IntVector::operator-() const {
    IntVector out(*this);
    for (auto& e : out.entries_) e = -e;
    return out;
}

IntVector& IntVector::operator+=(const IntVector& other) {
    if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector sum of different dimensions");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
    if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector difference of different dimensions");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

std::string IntVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].get_str();
    }
    return out + ")";
}

bool operator==(const IntVector& a, const IntVector& b) { return a.entries() == b.entries(); }

bool operator<(const IntVector& a, const IntVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }

IntVector operator*(const Integer& c, const IntVector& v) {
    IntVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = c * v[i];
    return out;
}

std::ostream& operator<<(std::ostream& out, const IntVector& v) { return out << v.to_string(); }

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "dot product of different dimensions");
    Integer s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& e : v.entries()) g = gcd(g, e);
    return g;
}

IntVector primitive_vector(const IntVector& v) {
    Integer g = content(v);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive vector of the zero vector");
    IntVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
    return out;
}

Integer det2(const IntVector& a, const IntVector& b) {
    if (a.dim() != 2 || b.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "det2 needs planar vectors");
    return a[0] * b[1] - a[1] * b[0];
}

IntVector unit_vector(std::size_t dim, std::size_t i) {
    IntVector v(dim);
    v[i] = 1;
    return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty()) return IntMatrix();
    IntMatrix m(columns[0].dim(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].dim() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "ragged matrix columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ",";
        out += row(i).to_string();
    }
    return out + "]";
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
    if (m.cols() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

struct Reducer {
    IntMatrix a;
    IntMatrix u;
    IntMatrix uinv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
    }

    // row_i -= q * row_j
    void subtract(std::size_t i, std::size_t j, const Integer& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, j) += q * uinv(r, i);
    }

    void negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
    }
};

}  // namespace

RowEchelon row_echelon(const IntMatrix& m) {
    Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.rows())};
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (red.a(i, c) == 0) continue;
                if (best == m.rows() || abs(red.a(i, c)) < abs(red.a(best, c))) best = i;
            }
            if (best == m.rows()) break;
            red.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (red.a(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), red.a(i, c).get_mpz_t(), red.a(r, c).get_mpz_t());
                red.subtract(i, r, q);
                if (red.a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (red.a(r, c) == 0) continue;
        if (red.a(r, c) < 0) red.negate(r);
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(red.a);
    out.transform = std::move(red.u);
    out.inverse = std::move(red.uinv);
    return out;
}

Integer gcd_minors2(const IntMatrix& m) {
    if (m.cols() != 2 || m.rows() < 2) {
        throw Error(ErrorKind::DimensionMismatch, "gcd_minors2 needs a matrix with 2 columns and at least 2 rows");
    }
    Integer g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j) g = gcd(g, Integer(m(i, 0) * m(j, 1) - m(j, 0) * m(i, 1)));
    return g;
}

Integer gcd_minors2(const IntVector& a, const IntVector& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "gcd_minors2 columns of different dimensions");
    return gcd_minors2(IntMatrix::from_columns({a, b}));
}

Integer lattice_index(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) throw Error(ErrorKind::EmptyInput, "lattice_index of an empty vector list");
    for (const auto& v : vectors) {
        if (v.dim() != vectors[0].dim()) throw Error(ErrorKind::DimensionMismatch, "lattice_index vectors of different dimensions");
    }
    auto ech = row_echelon(IntMatrix::from_columns(vectors));
    if (ech.rank < vectors.size()) return 0;
    Integer d = 1;
    for (std::size_t i = 0; i < ech.rank; ++i) d *= ech.reduced(i, ech.pivot_columns[i]);
    return abs(d);
}

std::size_t rank_of(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return 0;
    return row_echelon(IntMatrix::from_columns(vectors)).rank;
}

std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) return {};
    auto ech = row_echelon(IntMatrix::from_columns(vectors));
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < ech.rank; ++i) basis.push_back(ech.inverse.column(i));
    return basis;
}

IntMatrix unimodular_to_e1(const IntVector& v) {
    if (content(v) != 1) throw Error(ErrorKind::InvalidArgument, "unimodular_to_e1 needs a primitive vector");
    return row_echelon(IntMatrix::from_columns({v})).transform;
}

}  // namespace tropimpl
