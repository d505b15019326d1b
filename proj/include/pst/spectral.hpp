#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pst/bigint.hpp"
#include "pst/exact.hpp"
#include "pst/partitioned_graph.hpp"

namespace pst {

/// Tolerances used throughout certification.
struct SpectralTolerances {
    double support = 1e-8;   // eigenvalue membership in Phi_a
    double fit = 1e-6;       // integrality of gap ratios
    double cluster = 1e-7;   // eigenvalue clustering before projector formation
    double fidelity_small = 1e-9; // graphs up to 200 vertices
    double fidelity_large = 1e-8;

    double fidelity_for(int size) const { return size <= 200 ? fidelity_small : fidelity_large; }
};

/// Eigenvalues and orthonormal eigenvectors of a real symmetric matrix.
/// Invariants: residual and orthonormality within 1e-10 * ||A||.
struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // columns
};

EigenSystem eigensystem(const WeightedGraph& g);

/// |<b| e^{-iAt} |a>| from a precomputed eigensystem.
double fidelity(const EigenSystem& es, int a, int b, double t);
double fidelity(const WeightedGraph& g, double t); // input -> output
std::complex<double> transfer_amplitude(const EigenSystem& es, int a, int b, double t);

/// Distinct-eigenvalue clusters: ranges [first, last) of eigenvector columns.
std::vector<std::pair<int, int>> eigenvalue_clusters(const EigenSystem& es, double cluster_tol);

struct CospectralitySign {
    double eigenvalue = 0.0;
    bool in_support = false;        // ||E a|| above tolerance
    std::optional<int> sign;        // +1/-1 when E|a> = s E|b> within tolerance
};

/// Per distinct eigenvalue: the sign s with E|a> = s E|b>, degeneracy-safe.
std::vector<CospectralitySign> strong_cospectrality(const EigenSystem& es, int a, int b,
                                                    const SpectralTolerances& tol = {});

struct QuadraticFit {
    std::int64_t alpha = 0;
    std::vector<std::int64_t> beta; // per supported eigenvalue, ascending
    std::int64_t delta = 1;
    std::vector<double> support_values; // the Phi_a eigenvalues
    bool gap_parity_alternates = false; // consecutive (beta_n - beta_m)/2 all odd

    QuadraticEigenvalue eigenvalue(std::size_t n) const { return {alpha, beta.at(n), delta}; }
};

/// Fit lambda_n = (alpha + beta_n sqrt(delta))/2 over the input-supported
/// spectrum with integer alpha, beta, delta and gcd-normalized gaps.
/// Returns nullopt when no integral fit exists.
std::optional<QuadraticFit> fit_quadratic_spectrum(const EigenSystem& es, int a,
                                                   const SpectralTolerances& tol = {});

enum class Verdict { kPst, kRevivalOnly, kNeither };

std::string to_string(Verdict v);

struct SpectrumReport {
    std::vector<double> eigenvalues;           // distinct, ascending
    std::vector<bool> support;                 // Phi_a membership per eigenvalue
    std::vector<std::optional<int>> cospectrality_sign;
    std::optional<QuadraticFit> fit;
    bool sign_parity_consistent = false;       // parity of (beta_n-beta_m)/2 matches signs
    bool support_simple = true;                // every Phi_a eigenspace one-dimensional
    double transfer_time = 0.0;                // pi / sqrt(delta), when fitted
    double revival_time = 0.0;                 // 2 * transfer_time
    double fidelity_at_transfer = 0.0;
    double revival_fidelity = 0.0;
    double max_scan_fidelity = 0.0;
    double max_scan_time = 0.0;
    int eccentricity = -1;
    int support_size = 0;
    bool spectrally_extremal = false;          // |Phi_a| == eccentricity + 1
    Verdict verdict = Verdict::kNeither;
    int size = 0;
    double tolerance = 0.0;
};

/// Full certification pipeline over a weighted graph with marked ends.
SpectrumReport certify(const WeightedGraph& g, const SpectralTolerances& tol = {},
                       int scan_points = 100000);

/// <a| A^eps |b> with eps = dist(a, b); exact integers for 0/1 adjacency.
BigInt path_count_k(const ExplicitGraph& g, std::int64_t a, std::int64_t b);
BigInt path_count_k(const ExplicitGraph& g); // input -> output
/// Weighted variant; the entry must be integral within tolerance.
BigInt path_count_k(const WeightedGraph& g, double tol = 1e-6);

/// True when the shortest-path count matches the spectral formula
/// delta^((|Phi_a|-1)/2) / |sum_n (-1)^n / prod(...)| evaluated exactly from
/// the fitted integer betas. Requires a PST certification with a fit.
bool k_formula_check(const WeightedGraph& g, const BigInt& path_count,
                     const SpectralTolerances& tol = {});
/// Same check with the path moment computed from the graph itself.
bool k_formula_check(const WeightedGraph& g);

} // namespace pst
