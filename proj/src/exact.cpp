#include "pst/exact.hpp"

#include <cmath>
#include <set>

#include "pst/errors.hpp"

namespace pst {

double QuadraticEigenvalue::value() const {
    return 0.5 * (alpha + beta * std::sqrt(static_cast<double>(delta)));
}

Rational rational_sum_of_reciprocal_products(std::span<const std::int64_t> lambdas) {
    if (lambdas.size() < 2) throw Error("set must contain at least two values");
    std::set<std::int64_t> unique(lambdas.begin(), lambdas.end());
    if (unique.size() != lambdas.size()) throw Error("set entries must be distinct");

    Rational sum(0);
    for (std::int64_t l : lambdas) {
        BigInt prod(1);
        for (std::int64_t m : lambdas) {
            if (m != l) prod *= BigInt(l - m);
        }
        bool odd = (l % 2 + 2) % 2 == 1;
        sum += Rational(BigInt(odd ? -1 : 1), prod);
    }
    if (sum.is_zero()) throw ZeroSumError("defining sum is zero, R undefined");
    return sum.reciprocal();
}

BigInt multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
    std::uint64_t total = 0;
    for (std::uint64_t p : parts) total += p;
    if (total > n) throw PartsExceedTotalError("parts sum exceeds total");
    BigInt r = factorial(n);
    for (std::uint64_t p : parts) r /= factorial(p);
    r /= factorial(n - total);
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigInt(0);
    std::uint64_t parts[1] = {k};
    return multinomial(n, parts);
}

} // namespace pst
