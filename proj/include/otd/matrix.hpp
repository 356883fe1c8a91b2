#ifndef OTD_MATRIX_HPP
#define OTD_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "otd/rational.hpp"

namespace otd {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
// Index of the first nonzero coordinate; -1 for the zero vector.
long first_nonzero(const Vec& v);

// Dense row-major matrix of rationals. All operations are exact and pure;
// values are safe to share across threads once constructed.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& d);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix column(const Vec& v);
    // Rank-one product u v^T.
    static Matrix outer(const Vec& u, const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix transpose() const;
    Matrix block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& m);

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec apply(const Vec& x) const;          // this * x
    Vec apply_transposed(const Vec& x) const; // this^T * x

    std::uint64_t max_entry_bits() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const { return pivot_columns.size(); }
};

// Unique reduced row echelon form. Pivots are chosen among the nonzero
// candidates of a column to minimize bit growth; the result is canonical
// regardless of that choice.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);
Rational det(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

// X with X*m = I_cols; requires full column rank.
Matrix left_inverse(const Matrix& m);
// X with m*X = I_rows; requires full row rank.
Matrix right_inverse(const Matrix& m);

// Columns form the canonical kernel basis (possibly zero columns).
Matrix kernel_basis(const Matrix& m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status;
    Matrix particular; // valid unless Inconsistent
    Matrix kernel;     // kernel basis of the coefficient matrix (columns)
    bool consistent() const { return status != SolveStatus::Inconsistent; }
    bool unique() const { return status == SolveStatus::Unique; }
};

// Exact solve of A X = B for a matrix (or column) right-hand side.
SolveResult solve(const Matrix& a, const Matrix& b);

} // namespace otd

#endif
