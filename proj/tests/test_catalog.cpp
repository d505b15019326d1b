#include <doctest.h>

#include "pst/bigint.hpp"
#include "pst/catalog.hpp"
#include "pst/exact.hpp"
#include "pst/spectral.hpp"

using namespace pst;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("binomial chains") {
    auto g3 = p2_hypercube_chain(3);
    std::vector<std::int64_t> occ;
    for (const auto& n : g3.nodes()) occ.push_back(n.occupancy);
    CHECK(occ == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(*g3.delta_hint() == 4);

    auto g6 = p2_hypercube_chain(6);
    std::vector<std::pair<std::int64_t, std::int64_t>> degrees;
    for (const auto& e : g6.edges()) degrees.emplace_back(e.du, e.dv);
    CHECK(degrees == std::vector<std::pair<std::int64_t, std::int64_t>>{
                         {6, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 6}});

    auto g1 = p2_hypercube_chain(1);
    CHECK(g1.node_count() == 2);
    CHECK(edge_coupling_squared(g1, 0, 1) == 1);

    for (int d = 1; d <= 20; ++d) {
        CHECK(vertex_count(p2_hypercube_chain(d)) == pow(BigInt(2), d));
        CHECK(validate(p2_hypercube_chain(d)).ok());
    }

    // the quotient is exactly the engineered chain, weight for weight
    for (int d : {2, 5, 9}) {
        auto q = quotient(p2_hypercube_chain(d));
        auto chain = standard_chain(d);
        CHECK((q.weights - chain.weights).norm() == 0.0);
    }
}

TEST_CASE("p3 grids") {
    auto g = p3_grid(5);
    auto occ_at = [&](int n0, int n2) {
        return g.node(g.find_node("(" + std::to_string(n0) + "," + std::to_string(n2) + ")"))
            .occupancy;
    };
    std::vector<std::vector<std::int64_t>> expected = {
        {1, 5, 10, 10, 5, 1}, {5, 20, 30, 20, 5}, {10, 30, 30, 10}, {10, 20, 10}, {5, 5}, {1}};
    for (int n0 = 0; n0 <= 5; ++n0) {
        for (int n2 = 0; n0 + n2 <= 5; ++n2) CHECK(occ_at(n0, n2) == expected[n0][n2]);
    }
    CHECK(vertex_count(g) == BigInt(243));
    CHECK(*g.delta_hint() == 2);

    auto p3 = p3_grid(1);
    CHECK(p3.node_count() == 3);
    std::vector<std::int64_t> occ;
    for (const auto& n : p3.nodes()) occ.push_back(n.occupancy);
    CHECK(occ == std::vector<std::int64_t>{1, 1, 1}); // the path P3

    for (int h = 1; h <= 10; ++h) {
        CHECK(vertex_count(p3_grid(h)) == pow(BigInt(3), h));
        CHECK(validate(p3_grid(h)).ok());
    }

    // row and column couplings follow the engineered-chain law sqrt(n(k-n))
    for (int h : {3, 5}) {
        auto grid = p3_grid(h);
        auto id = [](int a, int b) {
            return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        };
        for (int n0 = 0; n0 <= h; ++n0) {
            int k = h - n0 + 1; // nodes in this row
            for (int n2 = 0; n2 + 1 < k; ++n2) {
                auto u = grid.find_node(id(n0, n2)), v = grid.find_node(id(n0, n2 + 1));
                CHECK(edge_coupling_squared(grid, u, v) ==
                      static_cast<std::int64_t>(n2 + 1) * (k - 1 - n2));
            }
        }
        for (int n2 = 0; n2 <= h; ++n2) {
            int k = h - n2 + 1;
            for (int i = 0; i + 1 < k; ++i) { // i steps up from the bottom of the column
                int n0 = h - n2 - i;
                auto u = grid.find_node(id(n0, n2)), v = grid.find_node(id(n0 - 1, n2));
                CHECK(edge_coupling_squared(grid, u, v) ==
                      static_cast<std::int64_t>(i + 1) * (k - 1 - i));
            }
        }
    }
}

TEST_CASE("standard chains") {
    auto g = standard_chain(3);
    CHECK(g.weights(0, 1) == doctest::Approx(std::sqrt(3.0)));
    CHECK(g.weights(1, 2) == doctest::Approx(2.0));
    CHECK(g.weights(2, 3) == doctest::Approx(std::sqrt(3.0)));

    auto g4 = standard_chain(4);
    CHECK(g4.weights(0, 1) == doctest::Approx(2.0));
    CHECK(g4.weights(1, 2) == doctest::Approx(std::sqrt(6.0)));
    CHECK(g4.weights(2, 3) == doctest::Approx(std::sqrt(6.0)));
    CHECK(g4.weights(3, 4) == doctest::Approx(2.0));

    CHECK(standard_chain(1).weights(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("coutinho graph") {
    auto g = coutinho_graph();
    CHECK(vertex_count(g) == BigInt(13));
    CHECK(node_distances(g).transfer_distance == 4);
    CHECK(validate(g).ok());
    CHECK(*g.delta_hint() == 4);
}

TEST_CASE("distance-32 grid") {
    auto g = fig6_grid(); // throws if any edge degree comes out non-integral
    CHECK(vertex_count(g) == BigInt(680913));
    CHECK(g.node_count() == 153);
    CHECK(validate(g).ok());
    CHECK(node_distances(g).transfer_distance == 32);
    CHECK(g.node(g.input()).occupancy == 1);
    CHECK(g.node(g.output()).occupancy == 1);
}

TEST_CASE("degree inference") {
    CHECK(infer_degrees(15, 20, 12) == std::pair<std::int64_t, std::int64_t>{4, 3});
    CHECK(infer_degrees(7, 7, 9) == std::pair<std::int64_t, std::int64_t>{3, 3});
    CHECK(infer_degrees(1, 6, 6) == std::pair<std::int64_t, std::int64_t>{6, 1});
    CHECK_THROWS_AS(infer_degrees(2, 3, 5), NonIntegralDegreesError);
    CHECK_THROWS_AS(infer_degrees(1, 2, 3), NonIntegralDegreesError); // sqrt(6) not integral
}

TEST_CASE("stevanovic family") {
    auto g = stevanovic(5);
    std::vector<std::int64_t> occ;
    for (const auto& n : g.nodes()) occ.push_back(n.occupancy);
    CHECK(occ == std::vector<std::int64_t>{5, 1, 4, 2, 3, 3, 2, 4, 1, 5});
    CHECK(vertex_count(g) == BigInt(30)); // (D+1)(D+3)/4 with D = 9

    std::vector<std::int64_t> squares;
    for (const auto& e : g.edges()) squares.push_back(e.du * e.dv);
    CHECK(squares == std::vector<std::int64_t>{5, 4, 8, 6, 9, 6, 8, 4, 5});

    auto es = eigensystem(quotient(g));
    std::vector<double> expected{-5, -4, -3, -2, -1, 1, 2, 3, 4, 5};
    REQUIRE(es.values.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(es.values(i) - expected[i]) <= 1e-9);

    for (int p = 1; p <= 6; ++p) {
        auto fam = stevanovic(p);
        CHECK(validate(fam).ok());
        std::int64_t d = 2 * p - 1;
        CHECK(vertex_count(fam) == BigInt((d + 1) * (d + 3) / 4));
    }
}

TEST_SUITE_END();
