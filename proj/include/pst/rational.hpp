#pragma once

#include <cstdint>
#include <string>

#include "pst/bigint.hpp"
#include "pst/errors.hpp"

namespace pst {

/// Exact rational number. Invariants: gcd(|num|, den) = 1, den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den = BigInt(1)) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }
    Rational reciprocal() const {
        if (num_.is_zero()) throw Error("reciprocal of zero");
        return Rational(num_.is_negative() ? -den_ : den_, num_.abs(), NoNormalize{});
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return a * b.reciprocal();
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const {
        return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

private:
    struct NoNormalize {};
    Rational(BigInt num, BigInt den, NoNormalize) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw Error("rational with zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

/// v with x = 2^v * (odd/odd); negative v means the denominator carries 2^|v|.
inline std::int64_t two_adic_valuation(const Rational& x) {
    if (x.is_zero()) throw ZeroInputError("two_adic_valuation of zero");
    return static_cast<std::int64_t>(x.num().two_adic_valuation()) -
           static_cast<std::int64_t>(x.den().two_adic_valuation());
}

} // namespace pst
