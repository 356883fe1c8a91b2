#include "otd/subspace.hpp"

namespace otd {

Subspace Subspace::from_columns(const Matrix& spanning) {
    RrefResult rr = rref(spanning.transpose());
    Matrix basis(spanning.rows(), rr.rank());
    for (std::size_t i = 0; i < rr.rank(); ++i)
        for (std::size_t j = 0; j < spanning.rows(); ++j)
            basis.at(j, i) = rr.reduced.at(i, j);
    return Subspace(spanning.rows(), std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(ambient_dim, 0));
}

bool Subspace::contains(const Vec& v) const {
    require(v.size() == ambient_, ErrorCode::DimensionMismatch, "contains: ambient mismatch");
    if (vec_is_zero(v)) return true;
    if (dim() == 0) return false;
    return solve(basis_, Matrix::column(v)).consistent();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch,
            "intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
    // Kernel vectors (x; y) of [A | B] satisfy A x = -B y, so A x runs over
    // the intersection exactly.
    Matrix ker = kernel_basis(hstack(a.basis(), b.basis()));
    Matrix coords = ker.block(0, 0, a.dim(), ker.cols());
    return Subspace::from_columns(a.basis() * coords);
}

Subspace sum_subspace(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch,
            "sum: ambient mismatch");
    return Subspace::from_columns(hstack(a.basis(), b.basis()));
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch,
            "equality: ambient mismatch");
    return a == b;
}

Subspace column_space(const Matrix& m) { return Subspace::from_columns(m); }

Subspace row_space(const Matrix& m) { return Subspace::from_columns(m.transpose()); }

Subspace kernel(const Matrix& m) { return Subspace::from_columns(kernel_basis(m)); }

Subspace image(const Matrix& m) { return column_space(m); }

} // namespace otd
