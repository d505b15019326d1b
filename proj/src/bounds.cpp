#include "pst/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "pst/exact.hpp"
#include "pst/rational.hpp"

namespace pst {

double degree_distance_bound(std::int64_t max_degree, std::int64_t delta) {
    if (max_degree < 1 || delta < 1) throw Error("degree and delta must be positive");
    return 2.0 * static_cast<double>(max_degree) / std::sqrt(static_cast<double>(delta));
}

ParityVerdict parity_theorem_check(std::int64_t delta, std::int64_t distance,
                                   bool spectrally_extremal) {
    if (!spectrally_extremal) return {true, "not spectrally extremal; theorem does not apply"};
    if (delta % 2 != 0) return {false, "delta is odd"};
    if (delta % 4 == 2 && distance % 2 != 0)
        return {false, "delta = 2 mod 4 requires an even transfer distance"};
    return {true, ""};
}

BigInt edge_lower_bound(std::int64_t distance) {
    if (distance < 1) throw Error("distance must be >= 1");
    BigInt x = BigInt(distance) * BigInt(distance + 1) * BigInt(distance + 2);
    auto [q, r] = BigInt::divmod(x, BigInt(24));
    if (!r.is_zero()) q += BigInt(1);
    return q;
}

std::int64_t min_vertices_for_edges(const BigInt& edges) {
    std::int64_t n = 1;
    while (BigInt(n) * BigInt(n - 1) < edges * BigInt(2)) ++n;
    return n;
}

bool lambda_set_admissible(std::span<const std::int64_t> lambdas) {
    if (lambdas.size() <= 3) return false;
    std::vector<std::int64_t> sorted(lambdas.begin(), lambdas.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        std::int64_t gap = sorted[i] - sorted[i - 1];
        if (gap == 0 || gap % 2 == 0) return false; // missing runs must pair up
    }
    return true;
}

bool admissible_parity_check(std::span<const std::int64_t> lambdas) {
    if (!lambda_set_admissible(lambdas))
        throw InadmissibleSetError("set fails the alternating-parity hypothesis");
    Rational r = rational_sum_of_reciprocal_products(lambdas);
    return two_adic_valuation(r) <= -1;
}

namespace {

// nonincreasing row-sum profiles with sum of squares exactly `remaining`
void enumerate_profiles(int rows_left, int max_value, std::int64_t remaining,
                        std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (rows_left == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (int s = std::min<std::int64_t>(max_value, static_cast<std::int64_t>(std::sqrt(
                                                       static_cast<double>(remaining)) + 1));
         s >= 1; --s) {
        std::int64_t sq = static_cast<std::int64_t>(s) * s;
        if (sq > remaining) continue;
        if (remaining - sq > static_cast<std::int64_t>(rows_left - 1) * sq)
            continue; // later rows are no larger, cannot reach the total
        current.push_back(s);
        enumerate_profiles(rows_left - 1, s, remaining - sq, current, out);
        current.pop_back();
    }
}

/// A in {0,1}^(k x D) with row sums fixed by the profile and every weighted
/// column sum sum_r A[r][c]*s_r equal to the target.
struct GramSearch {
    int distance;
    std::int64_t target;
    const std::vector<int>& profile;
    std::vector<std::vector<unsigned>> patterns_by_weight; // popcount -> patterns
    std::vector<std::int64_t> column_sum;
    std::vector<std::int64_t> future; // future[r] = sum of profile[r..]
    std::vector<unsigned> rows;

    GramSearch(int d, std::int64_t t, const std::vector<int>& s)
        : distance(d), target(t), profile(s), column_sum(d, 0) {
        patterns_by_weight.resize(d + 1);
        for (unsigned p = 1; p < (1u << d); ++p)
            patterns_by_weight[std::popcount(p)].push_back(p);
        future.assign(s.size() + 1, 0);
        for (std::size_t r = s.size(); r-- > 0;) future[r] = future[r + 1] + s[r];
    }

    bool dfs(std::size_t r) {
        if (r == profile.size()) {
            for (std::int64_t c : column_sum) {
                if (c != target) return false;
            }
            return true;
        }
        int s = profile[r];
        for (unsigned p : patterns_by_weight[s]) {
            // interchangeable rows of equal weight are kept nonincreasing
            if (r > 0 && profile[r - 1] == s && p > rows[r - 1]) continue;
            bool ok = true;
            for (int c = 0; c < distance && ok; ++c) {
                std::int64_t add = (p >> c) & 1u ? s : 0;
                if (column_sum[c] + add > target) ok = false;
                if (column_sum[c] + add + future[r + 1] < target) ok = false;
            }
            if (!ok) continue;
            for (int c = 0; c < distance; ++c) {
                if ((p >> c) & 1u) column_sum[c] += s;
            }
            rows.push_back(p);
            if (dfs(r + 1)) return true;
            rows.pop_back();
            for (int c = 0; c < distance; ++c) {
                if ((p >> c) & 1u) column_sum[c] -= s;
            }
        }
        return false;
    }
};

/// Middle block for the odd-distance case: B in {0,1}^(k x k) with
/// B s = m s and B^T s = m s, aligning the column pair by the mirror map.
struct MiddleSearch {
    std::int64_t m;
    const std::vector<int>& s;
    std::vector<std::int64_t> column_sum;
    std::vector<std::int64_t> future;
    std::vector<unsigned> rows;

    MiddleSearch(std::int64_t mult, const std::vector<int>& profile)
        : m(mult), s(profile), column_sum(profile.size(), 0) {
        future.assign(s.size() + 1, 0);
        for (std::size_t r = s.size(); r-- > 0;) future[r] = future[r + 1] + s[r];
    }

    bool dfs(std::size_t r) {
        const int k = static_cast<int>(s.size());
        if (r == s.size()) {
            for (int c = 0; c < k; ++c) {
                if (column_sum[c] != m * s[c]) return false;
            }
            return true;
        }
        std::int64_t row_target = m * s[r];
        for (unsigned p = 0; p < (1u << k); ++p) {
            if (r > 0 && s[r - 1] == s[r] && p > rows[r - 1]) continue;
            std::int64_t row_sum = 0;
            for (int c = 0; c < k; ++c) {
                if ((p >> c) & 1u) row_sum += s[c];
            }
            if (row_sum != row_target) continue;
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
                std::int64_t add = (p >> c) & 1u ? s[r] : 0;
                if (column_sum[c] + add > m * s[c]) ok = false;
                if (column_sum[c] + add + future[r + 1] < m * s[c]) ok = false;
            }
            if (!ok) continue;
            for (int c = 0; c < k; ++c) {
                if ((p >> c) & 1u) column_sum[c] += s[r];
            }
            rows.push_back(p);
            if (dfs(r + 1)) return true;
            rows.pop_back();
            for (int c = 0; c < k; ++c) {
                if ((p >> c) & 1u) column_sum[c] -= s[r];
            }
        }
        return false;
    }
};

} // namespace

ColumnSearchResult minimal_column_count(int distance, int k_max) {
    if (distance < 2 || distance > 20) throw Error("distance out of supported range");
    ColumnSearchResult result;
    result.target = 2 * (static_cast<std::int64_t>(distance) - 1);
    // sum_c (A^T A 1)_c = ||A 1||^2 pins the squared row sums
    std::int64_t square_total = result.target * distance;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<std::vector<int>> profiles;
        std::vector<int> scratch;
        enumerate_profiles(k, distance, square_total, scratch, profiles);
        for (const auto& profile : profiles) {
            GramSearch gram(distance, result.target, profile);
            if (!gram.dfs(0)) continue;
            if (distance == 5) {
                // distance 5 pairs the two middle columns; their block must
                // map the weight profile to itself with coupling (D+1)/2
                MiddleSearch middle((distance + 1) / 2, profile);
                if (!middle.dfs(0)) continue;
            }
            result.k = k;
            for (unsigned p : gram.rows) {
                std::vector<int> bits(distance);
                for (int c = 0; c < distance; ++c) bits[c] = (p >> c) & 1;
                result.witness.push_back(std::move(bits));
            }
            return result;
        }
    }
    return result;
}

double efficiency(const BigInt& vertex_total, std::int64_t distance) {
    if (distance < 1) throw Error("distance must be >= 1");
    return log2(vertex_total) / static_cast<double>(distance);
}

double efficiency(double log2_vertices, std::int64_t distance) {
    return log2_vertices / static_cast<double>(distance);
}

double efficiency_projection(double eta, std::int64_t distance, int q) {
    double sum = 0.0;
    for (int k = 1; k <= q; ++k) sum += std::pow(0.25, k);
    return eta - 2.0 / static_cast<double>(distance) * sum;
}

double efficiency_projection_limit(double eta, std::int64_t distance) {
    return eta - 2.0 / (3.0 * static_cast<double>(distance));
}

BoundsReport bounds_report(const PartitionedGraph& g,
                           std::optional<std::int64_t> fallback_delta) {
    BoundsReport report;
    NodeDistances nd = node_distances(g);
    report.transfer_distance = nd.transfer_distance;
    report.max_degree = max_vertex_degree(g);
    report.delta = g.delta_hint() ? g.delta_hint() : fallback_delta;
    report.vertex_total = vertex_count(g);
    report.edge_total = explicit_edge_count(g);
    report.eta = efficiency(report.vertex_total, report.transfer_distance);

    if (report.delta) {
        // D <= 2d/sqrt(delta), exactly: D^2 * delta <= 4 d^2
        report.degree_distance_ok =
            BigInt(report.transfer_distance) * BigInt(report.transfer_distance) *
                BigInt(*report.delta) <=
            BigInt(4) * BigInt(report.max_degree) * BigInt(report.max_degree);
        report.parity = parity_theorem_check(*report.delta, report.transfer_distance, true);
    }
    report.edge_bound = edge_lower_bound(report.transfer_distance);
    report.edge_bound_ok = report.edge_total >= report.edge_bound;
    return report;
}

} // namespace pst
