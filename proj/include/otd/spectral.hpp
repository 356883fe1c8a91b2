#ifndef OTD_SPECTRAL_HPP
#define OTD_SPECTRAL_HPP

#include "otd/matrix.hpp"
#include "otd/polynomial.hpp"

namespace otd {

// Monic characteristic polynomial det(x I - M), exact.
Poly char_poly(const Matrix& m);

struct EigenPair {
    Rational value;
    Vec vector; // normalized so its first nonzero coordinate is 1
};

// Rational part of the spectrum. complete means the rational eigenvectors
// form a basis, i.e. M is diagonalizable over the rationals.
struct RationalSpectrum {
    std::vector<EigenPair> eigenpairs;
    bool complete = false;
};

RationalSpectrum eigen_rational(const Matrix& m);

bool is_diagonalizable(const Matrix& m);

// True iff the matrices pairwise commute and each is diagonalizable over the
// rationals (hence the family is simultaneously diagonalizable).
bool simultaneous_diag_check(const std::vector<Matrix>& ms);

// Eigen data of A B^{-1} computed through the pencil det(A - x B), which
// avoids forming the inverse. ok requires det A != 0, det B != 0 and a full
// set of distinct rational eigenvalues.
struct PencilEigen {
    bool ok = false;
    std::string reason;
    std::vector<Rational> values; // sorted ascending, distinct
};

PencilEigen pencil_distinct_eigenvalues(const Matrix& a, const Matrix& b);

// det(A - x B) as a polynomial in x (degree <= n, exact).
Poly pencil_det_poly(const Matrix& a, const Matrix& b);

} // namespace otd

#endif
