#include "pst/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "pst/exact.hpp"
#include "pst/rational.hpp"

namespace pst {

namespace {

void check_marked(const WeightedGraph& g) {
    if (g.input < 0 || g.output < 0 || g.input >= g.size() || g.output >= g.size())
        throw Error("weighted graph has no marked input/output");
}

std::vector<int> bfs_distances(const WeightedGraph& g, int start) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue;
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < g.size(); ++w) {
            if (g.weights(v, w) != 0.0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

EigenSystem eigensystem(const WeightedGraph& g) {
    const auto& a = g.weights;
    if (a.rows() != a.cols()) throw Error("adjacency matrix must be square");
    if (!a.isApprox(a.transpose(), 1e-12)) throw Error("adjacency matrix must be symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("symmetric eigensolver failed to converge");

    EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
    double norm = std::max(a.norm(), 1.0);
    double residual = (a * es.vectors - es.vectors * es.values.asDiagonal()).norm();
    double ortho = (es.vectors.transpose() * es.vectors -
                    Eigen::MatrixXd::Identity(a.rows(), a.cols()))
                       .norm();
    if (residual > 1e-10 * norm || ortho > 1e-10)
        throw ConvergenceError("eigensystem residual exceeds tolerance");
    return es;
}

std::complex<double> transfer_amplitude(const EigenSystem& es, int a, int b, double t) {
    std::complex<double> amp(0.0, 0.0);
    for (int k = 0; k < es.values.size(); ++k) {
        double w = es.vectors(b, k) * es.vectors(a, k);
        amp += std::polar(w, -es.values(k) * t);
    }
    return amp;
}

double fidelity(const EigenSystem& es, int a, int b, double t) {
    return std::abs(transfer_amplitude(es, a, b, t));
}

double fidelity(const WeightedGraph& g, double t) {
    check_marked(g);
    return fidelity(eigensystem(g), g.input, g.output, t);
}

std::vector<std::pair<int, int>> eigenvalue_clusters(const EigenSystem& es, double cluster_tol) {
    std::vector<std::pair<int, int>> clusters;
    int n = static_cast<int>(es.values.size());
    int first = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == n || es.values(k) - es.values(k - 1) > cluster_tol) {
            clusters.emplace_back(first, k);
            first = k;
        }
    }
    return clusters;
}

std::vector<CospectralitySign> strong_cospectrality(const EigenSystem& es, int a, int b,
                                                    const SpectralTolerances& tol) {
    std::vector<CospectralitySign> result;
    for (auto [first, last] : eigenvalue_clusters(es, tol.cluster)) {
        CospectralitySign entry;
        double mean = 0.0;
        Eigen::VectorXd pa = Eigen::VectorXd::Zero(last - first);
        Eigen::VectorXd pb = Eigen::VectorXd::Zero(last - first);
        for (int k = first; k < last; ++k) {
            mean += es.values(k);
            pa(k - first) = es.vectors(a, k);
            pb(k - first) = es.vectors(b, k);
        }
        entry.eigenvalue = mean / (last - first);
        entry.in_support = pa.norm() > tol.support;
        if (entry.in_support) {
            // projector coordinates: E|a> = sum_k <k|a> |k>; compare with E|b>
            if ((pa - pb).norm() <= tol.support) entry.sign = 1;
            else if ((pa + pb).norm() <= tol.support) entry.sign = -1;
        }
        result.push_back(entry);
    }
    return result;
}

std::optional<QuadraticFit> fit_quadratic_spectrum(const EigenSystem& es, int a,
                                                   const SpectralTolerances& tol) {
    std::vector<double> support;
    for (auto [first, last] : eigenvalue_clusters(es, tol.cluster)) {
        double norm2 = 0.0, mean = 0.0;
        for (int k = first; k < last; ++k) {
            norm2 += es.vectors(a, k) * es.vectors(a, k);
            mean += es.values(k);
        }
        if (std::sqrt(norm2) > tol.support) support.push_back(mean / (last - first));
    }
    if (support.size() < 2) return std::nullopt;

    double smallest_gap = support[1] - support[0];
    for (std::size_t i = 2; i < support.size(); ++i)
        smallest_gap = std::min(smallest_gap, support[i] - support[i - 1]);

    // The smallest gap is j multiples of sqrt(delta) for some small j.
    for (int j = 1; j <= 4; ++j) {
        double root = smallest_gap / j;
        auto delta = static_cast<std::int64_t>(std::llround(root * root));
        if (delta < 1) continue;
        double sqrt_delta = std::sqrt(static_cast<double>(delta));
        std::vector<std::int64_t> k(support.size());
        bool integral = true;
        for (std::size_t i = 0; i < support.size() && integral; ++i) {
            double ratio = (support[i] - support[0]) / sqrt_delta;
            k[i] = std::llround(ratio);
            integral = std::abs(ratio - static_cast<double>(k[i])) <= tol.fit;
        }
        if (!integral) continue;
        std::int64_t g = 0;
        for (std::size_t i = 1; i < k.size(); ++i) g = std::gcd(g, k[i] - k[i - 1]);
        if (g != 1) continue;

        // beta_n = beta_0 + 2 k_n with integer alpha = 2 lambda_0 - beta_0 sqrt(delta)
        auto center = static_cast<std::int64_t>(std::llround(2.0 * support[0] / sqrt_delta));
        std::optional<std::int64_t> best_beta0;
        std::int64_t best_alpha = 0;
        for (std::int64_t b0 = center - 4; b0 <= center + 4; ++b0) {
            double alpha = 2.0 * support[0] - static_cast<double>(b0) * sqrt_delta;
            auto rounded = static_cast<std::int64_t>(std::llround(alpha));
            if (std::abs(alpha - static_cast<double>(rounded)) > 4 * tol.fit) continue;
            if (!best_beta0 || std::llabs(rounded) < std::llabs(best_alpha) ||
                (std::llabs(rounded) == std::llabs(best_alpha) &&
                 std::llabs(b0) < std::llabs(*best_beta0))) {
                best_beta0 = b0;
                best_alpha = rounded;
            }
        }
        if (!best_beta0) continue;

        QuadraticFit fit;
        fit.delta = delta;
        fit.alpha = best_alpha;
        fit.support_values = support;
        fit.beta.resize(support.size());
        for (std::size_t i = 0; i < support.size(); ++i) fit.beta[i] = *best_beta0 + 2 * k[i];
        fit.gap_parity_alternates = true;
        for (std::size_t i = 1; i < k.size(); ++i) {
            if ((k[i] - k[i - 1]) % 2 == 0) fit.gap_parity_alternates = false;
        }
        return fit;
    }
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kPst: return "PST";
        case Verdict::kRevivalOnly: return "revival-only";
        default: return "neither";
    }
}

SpectrumReport certify(const WeightedGraph& g, const SpectralTolerances& tol, int scan_points) {
    check_marked(g);
    SpectrumReport report;
    report.size = g.size();
    report.tolerance = tol.fidelity_for(g.size());

    EigenSystem es = eigensystem(g);
    auto clusters = eigenvalue_clusters(es, tol.cluster);
    auto signs = strong_cospectrality(es, g.input, g.output, tol);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        report.eigenvalues.push_back(signs[c].eigenvalue);
        report.support.push_back(signs[c].in_support);
        report.cospectrality_sign.push_back(signs[c].sign);
        if (signs[c].in_support && clusters[c].second - clusters[c].first > 1)
            report.support_simple = false;
        if (signs[c].in_support) ++report.support_size;
    }

    auto dist = bfs_distances(g, g.input);
    report.eccentricity = *std::max_element(dist.begin(), dist.end());
    report.spectrally_extremal = report.support_size == report.eccentricity + 1;

    report.fit = fit_quadratic_spectrum(es, g.input, tol);

    // parity of (beta_n - beta_m)/2 must match the cospectrality sign product
    if (report.fit) {
        report.sign_parity_consistent = true;
        std::vector<int> support_signs;
        for (std::size_t c = 0; c < signs.size(); ++c) {
            if (!signs[c].in_support) continue;
            if (!signs[c].sign) {
                report.sign_parity_consistent = false;
                break;
            }
            support_signs.push_back(*signs[c].sign);
        }
        if (report.sign_parity_consistent &&
            support_signs.size() == report.fit->beta.size()) {
            for (std::size_t n = 1; n < support_signs.size(); ++n) {
                std::int64_t half_gap = (report.fit->beta[n] - report.fit->beta[n - 1]) / 2;
                int expected = half_gap % 2 == 0 ? 1 : -1;
                if (support_signs[n] * support_signs[n - 1] != expected)
                    report.sign_parity_consistent = false;
            }
        }
    }

    double scan_limit;
    if (report.fit) {
        double sqrt_delta = std::sqrt(static_cast<double>(report.fit->delta));
        report.transfer_time = M_PI / sqrt_delta;
        report.revival_time = 2.0 * report.transfer_time;
        report.fidelity_at_transfer = fidelity(es, g.input, g.output, report.transfer_time);
        report.revival_fidelity = fidelity(es, g.input, g.input, report.revival_time);
        scan_limit = 2.0 * M_PI / sqrt_delta;
    } else {
        double smallest_gap = 0.0;
        double prev = 0.0;
        bool have_prev = false;
        for (std::size_t c = 0; c < report.eigenvalues.size(); ++c) {
            if (!report.support[c]) continue;
            if (have_prev) {
                double gap = report.eigenvalues[c] - prev;
                smallest_gap = smallest_gap == 0.0 ? gap : std::min(smallest_gap, gap);
            }
            prev = report.eigenvalues[c];
            have_prev = true;
        }
        scan_limit = smallest_gap > 0.0 ? 2.0 * M_PI / smallest_gap : 2.0 * M_PI;
    }

    for (int i = 1; i <= scan_points; ++i) {
        double t = scan_limit * i / scan_points;
        double f = fidelity(es, g.input, g.output, t);
        if (f > report.max_scan_fidelity) {
            report.max_scan_fidelity = f;
            report.max_scan_time = t;
        }
    }

    double required = 1.0 - report.tolerance;
    if (report.fit && report.fidelity_at_transfer >= required)
        report.verdict = Verdict::kPst;
    else if (report.fit && report.revival_fidelity >= required)
        report.verdict = Verdict::kRevivalOnly;
    else
        report.verdict = Verdict::kNeither;
    return report;
}

BigInt path_count_k(const ExplicitGraph& g, std::int64_t a, std::int64_t b) {
    std::vector<std::vector<std::int64_t>> adj(g.vertex_count);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> dist(g.vertex_count, -1);
    std::deque<std::int64_t> queue;
    dist[a] = 0;
    queue.push_back(a);
    while (!queue.empty()) {
        std::int64_t v = queue.front();
        queue.pop_front();
        for (std::int64_t w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist[b] < 0) throw DisconnectedError("no path between marked vertices");

    // <a| A^eps |b> by repeated exact matrix-vector products
    std::vector<BigInt> state(g.vertex_count), next(g.vertex_count);
    state[b] = BigInt(1);
    for (int step = 0; step < dist[b]; ++step) {
        for (auto& x : next) x = BigInt(0);
        for (std::int64_t v = 0; v < g.vertex_count; ++v) {
            if (state[v].is_zero()) continue;
            for (std::int64_t w : adj[v]) next[w] += state[v];
        }
        std::swap(state, next);
    }
    return state[a];
}

BigInt path_count_k(const ExplicitGraph& g) { return path_count_k(g, g.input, g.output); }

BigInt path_count_k(const WeightedGraph& g, double tol) {
    check_marked(g);
    auto dist = bfs_distances(g, g.input);
    if (dist[g.output] < 0) throw DisconnectedError("no path between marked vertices");
    Eigen::VectorXd state = Eigen::VectorXd::Zero(g.size());
    state(g.output) = 1.0;
    for (int step = 0; step < dist[g.output]; ++step) state = g.weights * state;
    double entry = state(g.input);
    auto rounded = static_cast<std::int64_t>(std::llround(entry));
    if (std::abs(entry - static_cast<double>(rounded)) > tol * std::max(1.0, std::abs(entry)))
        throw Error("weighted path moment is not integral");
    return BigInt(rounded);
}

bool k_formula_check(const WeightedGraph& g, const BigInt& path_count,
                     const SpectralTolerances& tol) {
    SpectrumReport report = certify(g, tol, 1000);
    if (report.verdict != Verdict::kPst || !report.fit)
        throw Error("k-formula check requires a PST certification with a quadratic fit");
    const auto& beta = report.fit->beta;

    std::vector<std::int64_t> shifted(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) shifted[i] = (beta[i] - beta[0]) / 2;
    Rational r = rational_sum_of_reciprocal_products(shifted);

    // delta^((|Phi_a|-1)/2) * |R|; a half-integer exponent needs square delta
    std::size_t exponent = beta.size() - 1;
    BigInt numerator = pow(BigInt(report.fit->delta), exponent / 2);
    if (exponent % 2 == 1) {
        bool exact = false;
        BigInt root = isqrt(BigInt(report.fit->delta), &exact);
        if (!exact) return false;
        numerator *= root;
    }
    Rational k_spectral = Rational(numerator) * Rational(r.num().abs(), r.den().abs());
    return k_spectral.is_integer() && k_spectral.num() == path_count;
}

bool k_formula_check(const WeightedGraph& g) { return k_formula_check(g, path_count_k(g)); }

} // namespace pst
