#include "pst/catalog.hpp"

#include <array>
#include <cmath>

#include "pst/exact.hpp"

namespace pst {

namespace {

std::string grid_id(int n0, int n2) {
    return "(" + std::to_string(n0) + "," + std::to_string(n2) + ")";
}

} // namespace

PartitionedGraph p2_hypercube_chain(int dimension) {
    if (dimension < 1) throw Error("dimension must be >= 1");
    PartitionedGraph g;
    for (int n = 0; n <= dimension; ++n) {
        BigInt occ = binomial(dimension, n);
        g.add_node(std::to_string(n), occ.to_int64());
    }
    for (int n = 0; n < dimension; ++n)
        g.add_edge(n, n + 1, dimension - n, n + 1);
    g.set_input("0");
    g.set_output(std::to_string(dimension));
    g.set_delta_hint(4);
    return g;
}

PartitionedGraph p3_grid(int half_d) {
    if (half_d < 1) throw Error("half dimension must be >= 1");
    PartitionedGraph g;
    for (int n0 = 0; n0 <= half_d; ++n0) {
        for (int n2 = 0; n2 + n0 <= half_d; ++n2) {
            std::uint64_t parts[2] = {static_cast<std::uint64_t>(n0),
                                      static_cast<std::uint64_t>(n2)};
            g.add_node(grid_id(n0, n2), multinomial(half_d, parts).to_int64());
        }
    }
    for (int n0 = 0; n0 <= half_d; ++n0) {
        for (int n2 = 0; n2 + n0 <= half_d; ++n2) {
            if (n0 >= 1)
                g.add_edge(grid_id(n0, n2), grid_id(n0 - 1, n2), n0, half_d - n0 - n2 + 1);
            if (n0 + n2 + 1 <= half_d)
                g.add_edge(grid_id(n0, n2), grid_id(n0, n2 + 1), half_d - n0 - n2, n2 + 1);
        }
    }
    g.set_input(grid_id(half_d, 0));
    g.set_output(grid_id(0, half_d));
    g.set_delta_hint(2);
    return g;
}

WeightedGraph standard_chain(int distance) {
    if (distance < 1) throw Error("distance must be >= 1");
    WeightedGraph g;
    g.weights = Eigen::MatrixXd::Zero(distance + 1, distance + 1);
    for (int n = 0; n < distance; ++n) {
        double w = std::sqrt(static_cast<double>(n + 1) * (distance - n));
        g.weights(n, n + 1) = w;
        g.weights(n + 1, n) = w;
    }
    g.input = 0;
    g.output = distance;
    return g;
}

PartitionedGraph coutinho_graph() {
    PartitionedGraph g;
    g.add_node("0", 1);
    g.add_node("1", 4);
    g.add_node("2a", 2);
    g.add_node("2b", 1);
    g.add_node("3", 4);
    g.add_node("4", 1);
    g.add_edge("0", "1", 4, 1);
    g.add_edge("1", "2a", 1, 2);
    g.add_edge("1", "2b", 1, 4);
    g.add_edge("2a", "3", 2, 1);
    g.add_edge("2b", "3", 4, 1);
    g.add_edge("3", "4", 1, 4);
    g.set_input("0");
    g.set_output("4");
    g.set_delta_hint(4);
    return g;
}

std::pair<std::int64_t, std::int64_t> infer_degrees(std::int64_t n1, std::int64_t n2,
                                                    std::int64_t jsq) {
    if (n1 <= 0 || n2 <= 0 || jsq <= 0) throw Error("infer_degrees needs positive inputs");
    // d1 = sqrt(jsq*n2/n1), d2 = sqrt(jsq*n1/n2)
    BigInt a = BigInt(jsq) * BigInt(n2);
    BigInt b = BigInt(jsq) * BigInt(n1);
    auto [q1, r1] = BigInt::divmod(a, BigInt(n1));
    auto [q2, r2] = BigInt::divmod(b, BigInt(n2));
    bool e1 = false, e2 = false;
    BigInt d1, d2;
    if (r1.is_zero()) d1 = isqrt(q1, &e1);
    if (r2.is_zero()) d2 = isqrt(q2, &e2);
    if (!r1.is_zero() || !r2.is_zero() || !e1 || !e2)
        throw NonIntegralDegreesError("no integral degrees for occupancies " +
                                      std::to_string(n1) + "," + std::to_string(n2) +
                                      " with J^2=" + std::to_string(jsq));
    return {d1.to_int64(), d2.to_int64()};
}

namespace {

// Occupancy table of the distance-32 half-grid, row n0, column n2. The
// 680913 total is asserted by the tests as a transcription guard.
const std::array<std::vector<std::int64_t>, 17> kFig6Occupancies = {{
    {4, 4, 30, 35, 455, 273, 2002, 715, 1430, 715, 2002, 273, 455, 140, 120, 16, 1},
    {4, 60, 105, 455, 1365, 3003, 5005, 715, 715, 5005, 3003, 1365, 1820, 420, 240, 16},
    {30, 105, 2730, 2730, 30030, 15015, 10010, 715, 10010, 15015, 30030, 2730, 2730, 420, 120},
    {35, 455, 2730, 10010, 1001, 5005, 15015, 15015, 5005, 1001, 10010, 2730, 1820, 140},
    {455, 1365, 30030, 1001, 1001, 10010, 2145, 10010, 1001, 1001, 30030, 1365, 455},
    {273, 3003, 15015, 5005, 10010, 286, 286, 10010, 5005, 15015, 3003, 273},
    {2002, 5005, 10010, 15015, 2145, 286, 2145, 15015, 10010, 5005, 2002},
    {715, 715, 715, 15015, 10010, 10010, 15015, 715, 715, 715},
    {1430, 715, 10010, 5005, 1001, 5005, 10010, 715, 1430},
    {715, 5005, 15015, 1001, 1001, 15015, 5005, 715},
    {2002, 3003, 30030, 10010, 30030, 3003, 2002},
    {273, 1365, 2730, 2730, 1365, 273},
    {455, 1820, 2730, 1820, 455},
    {140, 420, 420, 140},
    {120, 240, 120},
    {16, 16},
    {1},
}};

} // namespace

PartitionedGraph fig6_grid() {
    constexpr int h = 16;
    PartitionedGraph g;
    for (int n0 = 0; n0 <= h; ++n0) {
        for (int n2 = 0; n2 + n0 <= h; ++n2)
            g.add_node(grid_id(n0, n2), kFig6Occupancies[n0][n2]);
    }
    auto occ = [&](int n0, int n2) { return kFig6Occupancies[n0][n2]; };
    for (int n0 = 0; n0 <= h; ++n0) {
        for (int n2 = 0; n2 + n0 <= h; ++n2) {
            if (n0 >= 1) {
                // column coupling J^2 = n0*(h - n0 - n2 + 1)
                std::int64_t jsq = static_cast<std::int64_t>(n0) * (h - n0 - n2 + 1);
                auto [d1, d2] = infer_degrees(occ(n0, n2), occ(n0 - 1, n2), jsq);
                g.add_edge(grid_id(n0, n2), grid_id(n0 - 1, n2), d1, d2);
            }
            if (n0 + n2 + 1 <= h) {
                // row coupling J^2 = (n2+1)*(h - n0 - n2)
                std::int64_t jsq = static_cast<std::int64_t>(n2 + 1) * (h - n0 - n2);
                auto [d1, d2] = infer_degrees(occ(n0, n2), occ(n0, n2 + 1), jsq);
                g.add_edge(grid_id(n0, n2), grid_id(n0, n2 + 1), d1, d2);
            }
        }
    }
    g.set_input(grid_id(h, 0));
    g.set_output(grid_id(0, h));
    g.set_delta_hint(2);
    return g;
}

PartitionedGraph stevanovic(int param) {
    if (param < 1) throw Error("parameter must be >= 1");
    PartitionedGraph g;
    int count = 2 * param;
    for (int p = 0; p < count; ++p) {
        std::int64_t occ = p % 2 == 0 ? param - p / 2 : p / 2 + 1;
        g.add_node(std::to_string(p), occ);
    }
    for (int e = 1; e < count; ++e) {
        // couplings J_{2n} = sqrt(n(p-n)), J_{2n+1} = sqrt((n+1)(p-n))
        std::int64_t n = e % 2 == 1 ? (e - 1) / 2 : e / 2;
        std::int64_t jsq = e % 2 == 1 ? (n + 1) * (param - n) : n * (param - n);
        auto [d1, d2] = infer_degrees(g.node(e - 1).occupancy, g.node(e).occupancy, jsq);
        g.add_edge(e - 1, e, d1, d2);
    }
    g.set_input("0");
    g.set_output(std::to_string(count - 1));
    return g;
}

PartitionedGraph build_family(const std::string& family, int parameter) {
    if (family == "p2-chain") return p2_hypercube_chain(parameter);
    if (family == "p3-grid") return p3_grid(parameter);
    if (family == "coutinho") return coutinho_graph();
    if (family == "fig6-grid") return fig6_grid();
    if (family == "stevanovic") return stevanovic(parameter);
    throw Error("unknown family: " + family);
}

} // namespace pst
