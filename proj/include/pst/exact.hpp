#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pst/bigint.hpp"
#include "pst/rational.hpp"

namespace pst {

/// Eigenvalue of the form (alpha + beta * sqrt(delta)) / 2.
struct QuadraticEigenvalue {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t delta = 1; // delta >= 1

    double value() const;
};

/// R = 1 / sum_{l in L} (-1)^l / prod_{m != l) (l - m), evaluated exactly.
/// Preconditions: entries distinct, size >= 2. Throws ZeroSumError when the
/// defining sum vanishes.
Rational rational_sum_of_reciprocal_products(std::span<const std::int64_t> lambdas);

/// n! / (prod parts_i! * (n - sum parts)!). Throws PartsExceedTotalError.
BigInt multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

BigInt binomial(std::uint64_t n, std::uint64_t k);

} // namespace pst
