#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "pst/bounds.hpp"
#include "pst/catalog.hpp"
#include "pst/exact.hpp"
#include "pst/spectral.hpp"

using namespace pst;

TEST_SUITE_BEGIN("bounds-analysis");

TEST_CASE("degree-distance bound") {
    CHECK(degree_distance_bound(7, 4) == doctest::Approx(7.0)); // saturated by hypercubes
    CHECK(degree_distance_bound(4, 2) == doctest::Approx(4.0 * std::sqrt(2.0)));
    CHECK(degree_distance_bound(1, 4) == doctest::Approx(1.0));
}

TEST_CASE("parity theorem verdicts") {
    CHECK_FALSE(parity_theorem_check(1, 3, true).accepted);
    CHECK_FALSE(parity_theorem_check(1, 8, true).accepted);
    CHECK(parity_theorem_check(2, 32, true).accepted);
    CHECK_FALSE(parity_theorem_check(2, 5, true).accepted);
    CHECK(parity_theorem_check(4, 5, true).accepted);
    CHECK(parity_theorem_check(4, 8, true).accepted);
    CHECK(parity_theorem_check(6, 4, true).accepted);
    CHECK_FALSE(parity_theorem_check(6, 3, true).accepted);
    CHECK(parity_theorem_check(1, 3, false).accepted); // theorem needs extremality
}

TEST_CASE("edge lower bound") {
    CHECK(edge_lower_bound(4) == BigInt(5));
    CHECK(min_vertices_for_edges(edge_lower_bound(4)) == 4); // in particular at least 3
    CHECK(edge_lower_bound(1) == BigInt(1));
    CHECK(edge_lower_bound(32) == BigInt(1496));
}

TEST_CASE("admissibility of integer sets") {
    std::vector<std::int64_t> ok{0, 1, 2, 3, 4, 5};
    CHECK(lambda_set_admissible(ok));
    std::vector<std::int64_t> gap_pair{0, 1, 4, 5};
    CHECK(lambda_set_admissible(gap_pair));
    std::vector<std::int64_t> single_missing{0, 1, 3, 4};
    CHECK_FALSE(lambda_set_admissible(single_missing));
    std::vector<std::int64_t> too_small{0, 1, 2};
    CHECK_FALSE(lambda_set_admissible(too_small));
    CHECK_THROWS_AS(admissible_parity_check(single_missing), InadmissibleSetError);
}

TEST_CASE("helper denominators carry a factor of two on all admissible sets") {
    auto sets = oracles::admissible_sets(12);
    CHECK(sets.size() == 349);
    for (const auto& set : sets) {
        CHECK(admissible_parity_check(set));
    }
    std::vector<std::int64_t> spot{0, 1, 4, 5};
    CHECK(rational_sum_of_reciprocal_products(spot).to_string() == "-15/4");
    CHECK(admissible_parity_check(spot));
}

TEST_CASE("minimal column counts") {
    auto d2 = minimal_column_count(2, 8);
    REQUIRE(d2.k.has_value());
    CHECK(*d2.k == 1);

    auto d4 = minimal_column_count(4, 8);
    REQUIRE(d4.k.has_value());
    CHECK(*d4.k == 3);
    CHECK(d4.target == 6);

    // the witness columns all see weighted sum 2(D-1)
    for (int c = 0; c < 4; ++c) {
        std::int64_t sum = 0;
        for (const auto& row : d4.witness) {
            int s = 0;
            for (int bit : row) s += bit;
            sum += row[c] * s;
        }
        CHECK(sum == 6);
    }
}

TEST_CASE("the distance-4 witness assembles into a transfer chain") {
    auto found = minimal_column_count(4, 8);
    REQUIRE(found.k.has_value());

    // group witness rows by their row sum; each group becomes a middle node
    std::map<int, std::vector<std::vector<int>>> groups;
    for (const auto& row : found.witness) {
        int s = 0;
        for (int bit : row) s += bit;
        groups[s].push_back(row);
    }
    PartitionedGraph g;
    g.add_node("0", 1);
    g.add_node("1", 4);
    for (const auto& [s, rows] : groups) {
        // column counts must be uniform for the grouping to be equitable
        std::vector<int> count(4, 0);
        for (const auto& row : rows) {
            for (int c = 0; c < 4; ++c) count[c] += row[c];
        }
        for (int c = 1; c < 4; ++c) REQUIRE(count[c] == count[0]);
        g.add_node("2s" + std::to_string(s), static_cast<std::int64_t>(rows.size()));
    }
    g.add_node("3", 4);
    g.add_node("4", 1);
    g.add_edge("0", "1", 4, 1);
    g.add_edge("3", "4", 1, 4);
    for (const auto& [s, rows] : groups) {
        std::vector<int> count(4, 0);
        for (const auto& row : rows) {
            for (int c = 0; c < 4; ++c) count[c] += row[c];
        }
        g.add_edge("1", "2s" + std::to_string(s), count[0], s);
        g.add_edge("2s" + std::to_string(s), "3", s, count[0]);
    }
    g.set_input("0");
    g.set_output("4");
    CHECK(validate(g).ok());
    CHECK(vertex_count(g) == BigInt(13));

    auto report = certify(quotient(g), {}, 2000);
    CHECK(report.verdict == Verdict::kPst);
    CHECK(report.fidelity_at_transfer >= 1.0 - 1e-9);
}

TEST_CASE("efficiency and its projections") {
    CHECK(efficiency(pow(BigInt(2), 13), 13) == doctest::Approx(1.0));
    CHECK(efficiency(pow(BigInt(3), 8), 16) == doctest::Approx(0.5 * std::log2(3.0)));
    double fig6 = efficiency(BigInt(680913), 32);
    CHECK(std::abs(fig6 - 0.606) < 5e-4);

    CHECK(efficiency_projection(fig6, 32, 0) == doctest::Approx(fig6));
    CHECK(efficiency_projection(fig6, 32, 1) == doctest::Approx(fig6 - 1.0 / 64.0));
    CHECK(efficiency_projection_limit(0.606, 32) == doctest::Approx(0.585).epsilon(1e-3));
    CHECK(efficiency_projection_limit(fig6, 32) == doctest::Approx(0.5847).epsilon(1e-3));
    // large q converges to the limit
    CHECK(efficiency_projection(fig6, 32, 30) ==
          doctest::Approx(efficiency_projection_limit(fig6, 32)).epsilon(1e-12));
}

TEST_CASE("catalog transfer graphs respect every bound") {
    std::vector<PartitionedGraph> graphs;
    for (int d = 1; d <= 6; ++d) graphs.push_back(p2_hypercube_chain(d));
    for (int h = 1; h <= 4; ++h) graphs.push_back(p3_grid(h));
    graphs.push_back(coutinho_graph());
    graphs.push_back(fig6_grid());
    for (const auto& g : graphs) {
        auto report = bounds_report(g);
        CHECK(report.degree_distance_ok);
        CHECK(report.parity.accepted);
        CHECK(report.edge_bound_ok);
    }
}

TEST_SUITE_END();
