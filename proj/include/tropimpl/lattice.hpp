#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tropimpl {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : entries_(dim) {}
    explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
    IntVector(std::initializer_list<long> entries);

    std::size_t dim() const { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    Integer& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Integer>& entries() const { return entries_; }
    bool is_zero() const;

    IntVector operator-() const;
    IntVector& operator+=(const IntVector& other);
    IntVector& operator-=(const IntVector& other);

    std::string to_string() const;

private:
    std::vector<Integer> entries_;
};

bool operator==(const IntVector& a, const IntVector& b);
inline bool operator!=(const IntVector& a, const IntVector& b) { return !(a == b); }
// Lexicographic; shorter vectors first.
bool operator<(const IntVector& a, const IntVector& b);
IntVector operator+(IntVector a, const IntVector& b);
IntVector operator-(IntVector a, const IntVector& b);
IntVector operator*(const Integer& c, const IntVector& v);
std::ostream& operator<<(std::ostream& out, const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);
IntVector primitive_vector(const IntVector& v);
// a.x*b.y - a.y*b.x for vectors of dimension 2.
Integer det2(const IntVector& a, const IntVector& b);
IntVector unit_vector(std::size_t dim, std::size_t i);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_columns(const std::vector<IntVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

bool operator==(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& m, const IntVector& v);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// U * m is in row echelon form, U unimodular, inverse = U^{-1}.
struct RowEchelon {
    IntMatrix reduced;
    IntMatrix transform;
    IntMatrix inverse;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(const IntMatrix& m);

Integer gcd_minors2(const IntMatrix& m);
Integer gcd_minors2(const IntVector& a, const IntVector& b);

// Index of the span of the vectors in its saturation, or 0 when they are dependent.
Integer lattice_index(const std::vector<IntVector>& vectors);

std::size_t rank_of(const std::vector<IntVector>& vectors);

// A Z-basis of (span_Q vectors) ∩ Z^r.
std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vectors);

// Unimodular U with U * v = e_1; v must be primitive.
IntMatrix unimodular_to_e1(const IntVector& v);

}  // namespace tropimpl
