#include "pst/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pst/errors.hpp"

namespace pst {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on INT64_MIN
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw Error("BigInt::from_string: empty literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error("BigInt::from_string: bad digit");
        r *= BigInt(10);
        r += BigInt(s[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

void BigInt::canonicalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(s));
    }
    return r;
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int m = compare_magnitude(*this, o);
    return sign_ >= 0 ? m : -m;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        limbs_ = add_magnitude(limbs_, o.limbs_);
    } else {
        int m = compare_magnitude(*this, o);
        if (m == 0) {
            *this = BigInt();
            return *this;
        }
        if (m > 0) {
            limbs_ = sub_magnitude(limbs_, o.limbs_);
        } else {
            limbs_ = sub_magnitude(o.limbs_, limbs_);
            sign_ = o.sign_;
        }
    }
    canonicalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        *this = BigInt();
        return *this;
    }
    std::vector<std::uint32_t> r(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    limbs_ = std::move(r);
    sign_ *= o.sign_;
    canonicalize();
    return *this;
}

std::size_t BigInt::bit_length() const {
    if (sign_ == 0) return 0;
    return (limbs_.size() - 1) * 32 + (32 - std::countl_zero(limbs_.back()));
}

std::size_t BigInt::two_adic_valuation() const {
    if (sign_ == 0) throw ZeroInputError("two_adic_valuation of zero");
    std::size_t v = 0;
    std::size_t i = 0;
    while (limbs_[i] == 0) {
        v += 32;
        ++i;
    }
    return v + std::countr_zero(limbs_[i]);
}

BigInt BigInt::shifted_left(std::size_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt r;
    r.sign_ = sign_;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    r.limbs_.assign(limb_shift, 0);
    std::uint32_t carry = 0;
    for (std::uint32_t limb : limbs_) {
        if (bit_shift == 0) {
            r.limbs_.push_back(limb);
        } else {
            r.limbs_.push_back((limb << bit_shift) | carry);
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(limb) >> (32 - bit_shift));
        }
    }
    if (carry) r.limbs_.push_back(carry);
    r.canonicalize();
    return r;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
    if (sign_ == 0) return *this;
    if (bits >= bit_length()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) >> bit_shift;
        if (bit_shift && i + 1 < limbs_.size())
            cur |= static_cast<std::uint64_t>(limbs_[i + 1]) << (32 - bit_shift);
        r.limbs_.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
    }
    r.canonicalize();
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw Error("BigInt division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    if (compare_magnitude(a, b) < 0) return {BigInt(), a};

    // shift-subtract long division over magnitudes
    BigInt rem, quot;
    const std::size_t n = a.bit_length();
    quot.limbs_.assign((n + 31) / 32, 0);
    BigInt babs = b.abs();
    for (std::size_t i = n; i-- > 0;) {
        rem = rem.shifted_left(1);
        bool bit = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        if (bit) {
            if (rem.sign_ == 0) {
                rem.sign_ = 1;
                rem.limbs_.assign(1, 1);
            } else {
                rem.limbs_[0] |= 1u;
            }
        }
        if (compare_magnitude(rem, babs) >= 0) {
            rem.limbs_ = sub_magnitude(rem.limbs_, babs.limbs_);
            rem.canonicalize();
            quot.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    quot.sign_ = 1;
    quot.canonicalize();
    quot.sign_ = quot.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    if (!rem.limbs_.empty()) rem.sign_ = a.sign_;
    return {quot, rem};
}

BigInt& BigInt::operator/=(const BigInt& o) {
    *this = divmod(*this, o).first;
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    *this = divmod(*this, o).second;
    return *this;
}

bool BigInt::fits_int64() const {
    if (bit_length() < 64) return true;
    // INT64_MIN is representable with exactly 64 bits
    return bit_length() == 64 && sign_ < 0 && limbs_[1] == 0x80000000u && limbs_[0] == 0;
}

std::int64_t BigInt::to_int64() const {
    if (sign_ == 0) return 0;
    std::uint64_t mag = limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return sign_ > 0 ? static_cast<std::int64_t>(mag) : -static_cast<std::int64_t>(mag - 1) - 1;
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return sign_ > 0 ? r : -r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks; // base 10^9, little-endian
    std::vector<std::uint32_t> work = limbs_;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // binary gcd: only shifts and subtraction
    std::size_t shift = std::min(a.two_adic_valuation(), b.two_adic_valuation());
    a = a.shifted_right(a.two_adic_valuation());
    while (!b.is_zero()) {
        b = b.shifted_right(b.two_adic_valuation());
        if (a > b) std::swap(a, b);
        b -= a;
    }
    return a.shifted_left(shift);
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt factorial(std::uint64_t n) {
    BigInt r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r *= BigInt(static_cast<std::int64_t>(i));
    return r;
}

BigInt isqrt(const BigInt& x, bool* exact) {
    if (x.is_negative()) throw Error("isqrt of negative value");
    if (x.is_zero()) {
        if (exact) *exact = true;
        return BigInt();
    }
    BigInt lo(0), hi = BigInt(1).shifted_left(x.bit_length() / 2 + 1);
    while (lo < hi) { // invariant: lo^2 <= x < (hi+1)^2
        BigInt mid = (lo + hi + BigInt(1)).shifted_right(1);
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid - BigInt(1);
    }
    if (exact) *exact = (lo * lo == x);
    return lo;
}

double log2(const BigInt& x) {
    if (x.sign() <= 0) throw Error("log2 of non-positive value");
    std::size_t bits = x.bit_length();
    if (bits <= 52) return std::log2(x.to_double());
    BigInt top = x.shifted_right(bits - 52);
    return std::log2(top.to_double()) + static_cast<double>(bits - 52);
}

} // namespace pst
