#ifndef OTD_POLYNOMIAL_HPP
#define OTD_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "otd/rational.hpp"

namespace otd {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The zero polynomial is the empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly x_power(std::size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact field division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string str() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// All rational roots with multiplicities, sorted by value. Non-rational roots
// are not reported. Exact: every returned root satisfies p(root) = 0.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

} // namespace otd

#endif
