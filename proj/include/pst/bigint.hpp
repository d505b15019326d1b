#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pst {

/// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
/// Canonical form: no leading zero limbs, zero has sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(std::string_view s);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return sign_ == 0 || (limbs_[0] & 1u) == 0; }

    bool fits_int64() const;
    std::int64_t to_int64() const; // precondition: fits_int64()
    double to_double() const;

    std::size_t bit_length() const;
    /// Exponent of 2 in the factorization; precondition: nonzero.
    std::size_t two_adic_valuation() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o); // truncated toward zero
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    /// Quotient and remainder, truncated toward zero; remainder has the
    /// dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

    BigInt shifted_left(std::size_t bits) const;
    BigInt shifted_right(std::size_t bits) const;

    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    std::string to_string() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_; // little-endian, empty iff zero

    void canonicalize();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // precondition: |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);
BigInt pow(const BigInt& base, std::uint64_t exp);
BigInt factorial(std::uint64_t n);
/// Floor of the square root; `exact` reports whether the input is a perfect square.
BigInt isqrt(const BigInt& x, bool* exact = nullptr);
/// log2 of a positive value, accurate enough for efficiency reports.
double log2(const BigInt& x);

} // namespace pst
