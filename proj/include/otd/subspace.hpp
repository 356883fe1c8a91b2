#ifndef OTD_SUBSPACE_HPP
#define OTD_SUBSPACE_HPP

#include "otd/matrix.hpp"

namespace otd {

// Linear subspace of K^ambient in canonical form: the stored basis matrix is
// the rref of the transposed spanning set, transposed back. Two subspaces are
// equal iff their canonical basis matrices are identical, which makes
// equality a structural comparison.
class Subspace {
public:
    static Subspace from_columns(const Matrix& spanning);
    static Subspace zero(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    // ambient x dim, full column rank, canonical.
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_;
    Matrix basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_subspace(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);

Subspace column_space(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

} // namespace otd

#endif
