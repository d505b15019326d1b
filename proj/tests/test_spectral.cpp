#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pst/catalog.hpp"
#include "pst/rewrite.hpp"
#include "pst/spectral.hpp"

using namespace pst;

namespace {

WeightedGraph p2_graph() {
    WeightedGraph g;
    g.weights = Eigen::MatrixXd::Zero(2, 2);
    g.weights(0, 1) = g.weights(1, 0) = 1.0;
    g.input = 0;
    g.output = 1;
    return g;
}

/// Explicit hypercube of dimension d by repeated doubling.
ExplicitGraph hypercube(int d) {
    ExplicitGraph g;
    g.vertex_count = 1ll << d;
    for (std::int64_t v = 0; v < g.vertex_count; ++v) {
        for (int b = 0; b < d; ++b) {
            std::int64_t w = v ^ (1ll << b);
            if (v < w) g.edges.emplace_back(v, w);
        }
    }
    g.input = 0;
    g.output = g.vertex_count - 1;
    g.node_of.assign(g.vertex_count, 0);
    return g;
}

} // namespace

TEST_SUITE_BEGIN("spectral-verifier");

TEST_CASE("eigensystems of small chains") {
    auto es = eigensystem(p2_graph());
    CHECK(es.values(0) == doctest::Approx(-1.0));
    CHECK(es.values(1) == doctest::Approx(1.0));

    auto chain = eigensystem(standard_chain(3));
    std::vector<double> expected{-3, -1, 1, 3};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(chain.values(i) - expected[i]) <= 1e-10);
}

TEST_CASE("projector completeness") {
    for (const auto& wg : {quotient(coutinho_graph()), standard_chain(5), quotient(p3_grid(3))}) {
        auto es = eigensystem(wg);
        double sum = 0.0;
        for (int k = 0; k < es.values.size(); ++k)
            sum += es.vectors(wg.input, k) * es.vectors(wg.input, k);
        CHECK(std::abs(sum - 1.0) <= 1e-10);
    }
}

TEST_CASE("fidelity values") {
    CHECK(fidelity(p2_graph(), M_PI / 2) == doctest::Approx(1.0).epsilon(1e-12));

    for (int d = 1; d <= 32; ++d) {
        CHECK(fidelity(standard_chain(d), M_PI / 2) >= 1.0 - 1e-9);
    }

    // 3-site chain closed form: |cos(2t) - 1| / 2
    auto es2 = eigensystem(standard_chain(2));
    for (double t : {0.1, M_PI / 4, 0.9, 2.0}) {
        CHECK(fidelity(es2, 0, 2, t) ==
              doctest::Approx(std::abs(std::cos(2 * t) - 1.0) / 2.0).epsilon(1e-10));
    }
    CHECK(fidelity(es2, 0, 2, M_PI / 4) == doctest::Approx(0.5));

    auto c = quotient(coutinho_graph());
    CHECK(fidelity(c, 0.0) == doctest::Approx(0.0));
    auto ces = eigensystem(c);
    CHECK(fidelity(ces, c.input, c.input, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("strong cospectrality signs") {
    auto es = eigensystem(p2_graph());
    auto signs = strong_cospectrality(es, 0, 1);
    REQUIRE(signs.size() == 2);
    CHECK(*signs[0].sign == -1); // eigenvalue -1 is the antisymmetric state
    CHECK(*signs[1].sign == 1);

    auto chain = eigensystem(standard_chain(4));
    auto chain_signs = strong_cospectrality(chain, 0, 4);
    REQUIRE(chain_signs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(chain_signs[i].in_support);
        REQUIRE(chain_signs[i].sign.has_value());
        CHECK(*chain_signs[i].sign == (i % 2 == 0 ? 1 : -1) * *chain_signs[0].sign);
    }
}

TEST_CASE("quadratic spectrum fits") {
    auto chain = eigensystem(standard_chain(4));
    auto fit = fit_quadratic_spectrum(chain, 0);
    REQUIRE(fit.has_value());
    CHECK(fit->delta == 4);
    CHECK(fit->alpha == 0);
    CHECK(fit->beta == std::vector<std::int64_t>{-4, -2, 0, 2, 4});
    CHECK(fit->gap_parity_alternates);

    auto p3q = quotient(p3_grid(1));
    auto p3fit = fit_quadratic_spectrum(eigensystem(p3q), p3q.input);
    REQUIRE(p3fit.has_value());
    CHECK(p3fit->delta == 2);
    CHECK(p3fit->support_values.size() == 3);

    auto perturbed = standard_chain(4);
    perturbed.weights(1, 2) += 1e-2;
    perturbed.weights(2, 1) += 1e-2;
    CHECK_FALSE(fit_quadratic_spectrum(eigensystem(perturbed), 0).has_value());
}

TEST_CASE("certification verdicts") {
    auto coutinho = certify(quotient(coutinho_graph()));
    CHECK(coutinho.verdict == Verdict::kPst);
    CHECK(coutinho.transfer_time == doctest::Approx(M_PI / 2));
    CHECK(coutinho.fidelity_at_transfer >= 1.0 - 1e-9);
    CHECK(coutinho.revival_fidelity >= 1.0 - 1e-9);
    CHECK(coutinho.spectrally_extremal);
    CHECK(coutinho.sign_parity_consistent);

    auto expanded = certify(adjacency(expand(coutinho_graph())));
    CHECK(expanded.verdict == Verdict::kPst);
    CHECK(expanded.fidelity_at_transfer >= 1.0 - 1e-9);

    auto stev = certify(quotient(stevanovic(5)));
    CHECK(stev.verdict == Verdict::kRevivalOnly);
    CHECK(stev.fit.has_value());
    CHECK(stev.revival_time == doctest::Approx(2 * M_PI));
    CHECK(stev.revival_fidelity >= 1.0 - 1e-9);
    CHECK(stev.max_scan_fidelity < 1.0 - 1e-3);
    CHECK_FALSE(stev.fit->gap_parity_alternates); // one even gap in the ladder
    CHECK_FALSE(stev.sign_parity_consistent);

    // off-transfer graphs certify as neither
    auto perturbed = standard_chain(3);
    perturbed.weights(0, 1) = perturbed.weights(1, 0) = 1.7;
    auto none = certify(perturbed, {}, 2000);
    CHECK(none.verdict == Verdict::kNeither);
}

TEST_CASE("verdicts survive vertex permutations") {
    auto q = quotient(coutinho_graph());
    int n = q.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i * 5 + 3) % n; // a fixed permutation
    WeightedGraph p;
    p.weights = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) p.weights(perm[i], perm[j]) = q.weights(i, j);
    }
    p.input = perm[q.input];
    p.output = perm[q.output];
    auto a = certify(q, {}, 2000), b = certify(p, {}, 2000);
    CHECK(a.verdict == b.verdict);
    CHECK(a.fit->delta == b.fit->delta);
    CHECK(a.fidelity_at_transfer == doctest::Approx(b.fidelity_at_transfer).epsilon(1e-12));
}

TEST_CASE("lift rescales time by sqrt(2)") {
    auto g = p3_grid(2);
    auto lifted = delta_double(g);
    auto before = eigensystem(quotient(g));
    auto after = eigensystem(quotient(lifted));
    auto qg = quotient(g);
    for (int i = 1; i <= 100; ++i) {
        double t = 2.0 * M_PI * i / 100.0;
        CHECK(std::abs(fidelity(before, qg.input, qg.output, t) -
                       fidelity(after, qg.input, qg.output, t / std::sqrt(2.0))) <= 1e-9);
    }
}

TEST_CASE("path counts") {
    CHECK(path_count_k(hypercube(1)) == BigInt(1));
    for (int d = 2; d <= 6; ++d) {
        CHECK(path_count_k(hypercube(d)) == factorial(d));
        // any canonical realization of the chain partition counts the same
        CHECK(path_count_k(expand(p2_hypercube_chain(d))) == factorial(d));
    }

    auto ce = expand(coutinho_graph());
    auto walks = oracles::walk_count(ce.vertex_count, ce.edges, ce.input, ce.output, 4);
    CHECK(path_count_k(ce) == BigInt(static_cast<std::int64_t>(walks)));
    CHECK(walks == 24);

    CHECK(path_count_k(standard_chain(4)) == BigInt(24));
    CHECK(path_count_k(standard_chain(2)) == BigInt(2));
}

TEST_CASE("fitted eigenvalues reproduce the spectrum") {
    auto q = quotient(coutinho_graph());
    auto fit = fit_quadratic_spectrum(eigensystem(q), q.input);
    REQUIRE(fit.has_value());
    for (std::size_t n = 0; n < fit->beta.size(); ++n) {
        CHECK(std::abs(fit->eigenvalue(n).value() - fit->support_values[n]) <= 1e-9);
    }
}

TEST_CASE("the spectral k-formula matches path counting") {
    CHECK(k_formula_check(standard_chain(2)));
    CHECK(k_formula_check(standard_chain(2), path_count_k(standard_chain(2))));
    CHECK(k_formula_check(standard_chain(4), path_count_k(standard_chain(4))));
    CHECK(k_formula_check(adjacency(hypercube(3)), path_count_k(hypercube(3))));
    CHECK(path_count_k(hypercube(3)) == BigInt(6));
    CHECK(k_formula_check(adjacency(expand(coutinho_graph())),
                          path_count_k(expand(coutinho_graph()))));
    // a wrong count is rejected
    CHECK_FALSE(k_formula_check(standard_chain(4), BigInt(23)));
}

TEST_SUITE_END();
