#pragma once

#include "antialg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antialg {

using RatVector = std::vector<Rational>;

// Sparse rational matrix; only nonzero entries are stored.
class RatMatrix {
public:
    using Index = std::pair<std::size_t, std::size_t>;

    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    void add(std::size_t i, std::size_t j, const Rational& v);

    const std::map<Index, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nonzeros() const { return entries_.size(); }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    std::vector<RatVector> to_dense() const;
    RatMatrix transpose() const;
    RatVector apply(const RatVector& v) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    Rational trace() const;
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<Index, Rational> entries_;
};

bool is_zero_vector(const RatVector& v);

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right and the first row (top to bottom) with a nonzero entry is used.
struct Echelon {
    std::vector<RatVector> rows;       // nonzero rows of the RREF
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::size_t cols = 0;
};

Echelon rref(const std::vector<RatVector>& rows, std::size_t cols);
Echelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::vector<RatVector> kernel_basis(const RatMatrix& m);
// Some x with m x = b, or nullopt. Throws std::invalid_argument on size mismatch.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

struct QuotientSpace {
    std::size_t ambient_dim = 0;
    std::vector<RatVector> relation_basis;  // RREF rows of the relations
    std::vector<std::size_t> kept;          // ambient coordinates forming the section
    RatMatrix projection;                   // dim x ambient_dim
    RatMatrix section;                      // ambient_dim x dim

    std::size_t dim() const { return kept.size(); }
    RatVector project(const RatVector& v) const { return projection.apply(v); }
    RatVector lift(const RatVector& v) const { return section.apply(v); }
};

QuotientSpace quotient(std::size_t ambient_dim, const std::vector<RatVector>& relations);

}  // namespace antialg
