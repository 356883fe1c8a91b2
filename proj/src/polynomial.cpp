#include "otd/polynomial.hpp"

#include <algorithm>

namespace otd {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x_power(std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = Rational(1);
    return Poly(std::move(c));
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational zero;
    return i < c_.size() ? c_[i] : zero;
}

const Rational& Poly::leading() const {
    require(!c_.empty(), ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    require(!is_zero(), ErrorCode::ZeroPolynomial, "monic of zero polynomial");
    return leading().inverse() * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.degree() - b.degree() + 1);
    Rational lead_inv = b.leading().inverse();
    for (std::size_t qi = quo.size(); qi-- > 0;) {
        Rational f = rem[qi + b.degree()] * lead_inv;
        quo[qi] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[qi + j] -= f * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[i].str();
        if (i > 0) out += "*x^" + std::to_string(i);
    }
    return out;
}

} // namespace otd
