#ifndef OTD_RATIONAL_HPP
#define OTD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "otd/bitstats.hpp"
#include "otd/errors.hpp"

namespace otd {

// Arbitrary-precision rational, always stored reduced with positive
// denominator. Backed by GMP; every arithmetic result is exact. This is the
// single scalar type of the library (the matrix layer is written against this
// interface only, so another exact field could be slotted in behind it).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        require(den != 0, ErrorCode::InvalidArgument, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        require(den != 0, ErrorCode::InvalidArgument, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "num" or "num/den" with optional leading sign on the numerator.
    static Rational parse(const std::string& text);

    std::string str() const;

    const mpq_class& mpq() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::uint64_t bit_size() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; track(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; track(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; track(); return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), ErrorCode::InvalidArgument, "division by zero");
        v_ /= o.v_;
        track();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational inverse() const {
        require(!is_zero(), ErrorCode::InvalidArgument, "inverse of zero");
        return Rational(mpq_class(1) / v_, NoCanon{});
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    struct NoCanon {};
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) { track(); }

    void track() const {
        if (bitstats::enabled) bitstats::observe(bit_size());
    }

    mpq_class v_;
};

} // namespace otd

#endif
