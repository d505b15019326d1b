#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pst/bigint.hpp"
#include "pst/partitioned_graph.hpp"

namespace pst {

/// Upper bound 2d/sqrt(delta) on the transfer distance.
double degree_distance_bound(std::int64_t max_degree, std::int64_t delta);

struct ParityVerdict {
    bool accepted = true;
    std::string reason;
};

/// For spectrally extremal transfer: delta must be even, and delta = 2 mod 4
/// forces an even transfer distance.
ParityVerdict parity_theorem_check(std::int64_t delta, std::int64_t distance,
                                   bool spectrally_extremal);

/// Smallest edge count m with 2m >= D(D+1)(D+2)/12.
BigInt edge_lower_bound(std::int64_t distance);

/// Smallest N with C(N,2) >= m.
std::int64_t min_vertices_for_edges(const BigInt& edges);

/// True when the ordered set alternates parity (every consecutive difference
/// odd), has more than 3 elements -- the admissibility hypothesis.
bool lambda_set_admissible(std::span<const std::int64_t> lambdas);

/// two_adic_valuation(R(lambda)) <= -1; throws InadmissibleSetError when the
/// hypothesis fails.
bool admissible_parity_check(std::span<const std::int64_t> lambdas);

struct ColumnSearchResult {
    std::optional<int> k;                     // smallest admissible k, if found
    std::vector<std::vector<int>> witness;    // k x D 0/1 matrix
    std::int64_t target = 0;                  // required column sum 2(D-1)
};

/// Smallest k admitting a 0/1 matrix A in {0,1}^(k x D) whose Gram matrix has
/// the all-ones eigenvector with eigenvalue 2(D-1); exact integer DFS with
/// sorted-row and column-sum pruning.
ColumnSearchResult minimal_column_count(int distance, int k_max);

double efficiency(const BigInt& vertex_total, std::int64_t distance);
double efficiency(double log2_vertices, std::int64_t distance);

/// eta_D - (2/D) sum_{k=1..q} 4^-k; quartering the count on each squaring.
double efficiency_projection(double eta, std::int64_t distance, int q);
/// Large-q limit eta_D - 2/(3D).
double efficiency_projection_limit(double eta, std::int64_t distance);

struct BoundsReport {
    std::int64_t transfer_distance = 0;
    std::int64_t max_degree = 0;
    std::optional<std::int64_t> delta;
    BigInt vertex_total;
    BigInt edge_total;
    double eta = 0.0;
    bool degree_distance_ok = true;
    ParityVerdict parity;
    bool edge_bound_ok = true;
    BigInt edge_bound;
};

/// Evaluate every bound against a partitioned graph; delta comes from the
/// hint when present, else from the fallback (e.g. a fitted value).
BoundsReport bounds_report(const PartitionedGraph& g,
                           std::optional<std::int64_t> fallback_delta = {});

} // namespace pst
