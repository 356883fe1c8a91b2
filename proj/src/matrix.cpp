#include "otd/matrix.hpp"

#include <algorithm>

namespace otd {

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "dot of unequal lengths");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

long first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<long>(i);
    return -1;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == m.cols_, ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::column(const Vec& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::outer(const Vec& u, const Vec& v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = u[i] * v[j];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
    require(i0 + h <= rows_ && j0 + w <= cols_, ErrorCode::DimensionMismatch, "block out of range");
    Matrix b(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
    require(i0 + m.rows_ <= rows_ && j0 + m.cols_ <= cols_, ErrorCode::DimensionMismatch,
            "block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "add shapes");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch, "sub shapes");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "mul shapes");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = s * m.data_[i];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& x) const {
    require(x.size() == cols_, ErrorCode::DimensionMismatch, "apply length");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

Vec Matrix::apply_transposed(const Vec& x) const {
    require(x.size() == rows_, ErrorCode::DimensionMismatch, "apply length");
    Vec y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[j] += at(i, j) * x[i];
    }
    return y;
}

std::uint64_t Matrix::max_entry_bits() const {
    std::uint64_t b = 0;
    for (const Rational& x : data_) b = std::max(b, x.bit_size());
    return b;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "hstack rows");
    Matrix r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "vstack cols");
    Matrix r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

namespace {

// Pivot choice: among nonzero candidates in the column, take the entry with
// the smallest bit size. Keeps intermediate fractions from swelling; the rref
// itself is canonical whatever pivot is picked.
long pick_pivot(const Matrix& m, std::size_t col, std::size_t from_row) {
    long best = -1;
    std::uint64_t best_bits = 0;
    for (std::size_t i = from_row; i < m.rows(); ++i) {
        if (m.at(i, col).is_zero()) continue;
        std::uint64_t bits = m.at(i, col).bit_size();
        if (best < 0 || bits < best_bits) {
            best = static_cast<long>(i);
            best_bits = bits;
        }
    }
    return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

} // namespace

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        long p = pick_pivot(m, c, r);
        if (p < 0) continue;
        swap_rows(m, r, static_cast<std::size_t>(p));
        Rational inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    // Row echelon only; no back-substitution needed for the rank.
    Matrix w = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        long p = pick_pivot(w, c, r);
        if (p < 0) continue;
        swap_rows(w, r, static_cast<std::size_t>(p));
        Rational inv = w.at(r, c).inverse();
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (w.at(i, c).is_zero()) continue;
            Rational f = w.at(i, c) * inv;
            w.at(i, c) = Rational(0);
            for (std::size_t j = c + 1; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

Rational det(const Matrix& m) {
    require(m.is_square(), ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    Matrix w = m;
    Rational result(1);
    for (std::size_t c = 0; c < w.cols(); ++c) {
        long p = pick_pivot(w, c, c);
        if (p < 0) return Rational(0);
        if (static_cast<std::size_t>(p) != c) {
            swap_rows(w, c, static_cast<std::size_t>(p));
            result = -result;
        }
        result *= w.at(c, c);
        Rational inv = w.at(c, c).inverse();
        for (std::size_t i = c + 1; i < w.rows(); ++i) {
            if (w.at(i, c).is_zero()) continue;
            Rational f = w.at(i, c) * inv;
            for (std::size_t j = c + 1; j < w.cols(); ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return result;
}

bool is_invertible(const Matrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
    require(m.is_square(), ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    RrefResult rr = rref(hstack(m, Matrix::identity(m.rows())));
    require(rr.rank() == m.rows(), ErrorCode::SingularMatrix, "inverse of singular matrix");
    return rr.reduced.block(0, m.cols(), m.rows(), m.rows());
}

Matrix left_inverse(const Matrix& m) {
    RrefResult rows_of = rref(m.transpose());
    require(rows_of.rank() == m.cols(), ErrorCode::RankDeficient,
            "left inverse requires full column rank");
    // Pivot columns of m^T are independent rows of m.
    Matrix sub(m.cols(), m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j)
            sub.at(k, j) = m.at(rows_of.pivot_columns[k], j);
    Matrix sub_inv = inverse(sub);
    Matrix x(m.cols(), m.rows());
    for (std::size_t k = 0; k < m.cols(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i)
            x.at(i, rows_of.pivot_columns[k]) = sub_inv.at(i, k);
    return x;
}

Matrix right_inverse(const Matrix& m) {
    RrefResult cols_of = rref(m);
    require(cols_of.rank() == m.rows(), ErrorCode::RankDeficient,
            "right inverse requires full row rank");
    Matrix sub(m.rows(), m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            sub.at(i, k) = m.at(i, cols_of.pivot_columns[k]);
    Matrix sub_inv = inverse(sub);
    Matrix x(m.cols(), m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t j = 0; j < m.rows(); ++j)
            x.at(cols_of.pivot_columns[k], j) = sub_inv.at(k, j);
    return x;
}

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (next < rr.pivot_columns.size() && rr.pivot_columns[next] == c) {
                ++next;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Matrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = Rational(1);
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
            basis.at(rr.pivot_columns[i], k) = -rr.reduced.at(i, f);
    }
    return basis;
}

SolveResult solve(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "solve shapes");
    RrefResult rr = rref(hstack(a, b));
    for (std::size_t c : rr.pivot_columns) {
        if (c >= a.cols()) {
            return {SolveStatus::Inconsistent, Matrix(), Matrix()};
        }
    }
    Matrix particular(a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            particular.at(rr.pivot_columns[i], j) = rr.reduced.at(i, a.cols() + j);
    Matrix kernel = kernel_basis(a);
    SolveStatus status =
        rr.rank() == a.cols() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return {status, std::move(particular), std::move(kernel)};
}

} // namespace otd
