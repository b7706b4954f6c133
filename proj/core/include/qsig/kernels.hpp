#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsig/paths.hpp"
#include "qsig/qsim.hpp"
#include "qsig/rng.hpp"

namespace qsig {

enum class KernelMethod { SignaturePde, SignatureSeries, GueSeries, GueIntegralEq, GueClassicalMc, GueQuantum };

std::string to_string(KernelMethod m);
// Accepts the names above ("signature-pde", ...) plus "quantum" and "classical-mc".
KernelMethod parse_kernel_method(const std::string& name);
bool is_stochastic(KernelMethod m);

struct KernelConfig {
    KernelMethod method = KernelMethod::GueSeries;
    int depth = 16;            // series routes
    double grid_h = 1.0 / 256; // pde and integral-equation routes
    int matrix_n = 256;        // classical Monte Carlo
    int mc_samples = 400;
    int mc_trotter_k = 64;     // 0 selects the exact development
    QuantumParams quantum{8, 8, 32, 4000};
    std::uint64_t seed = kDefaultSeed;
    bool shared_samples = false;  // gram_matrix: reuse one stream for every entry
};

struct KernelValue {
    double value = 0.0;
    std::optional<double> std_error;
    double tail_bound = 0.0;
};

// Goursat scheme for k = 1 + int int k <ds, dt> on refine(s, h) x refine(t, h).
double signature_kernel_pde(const Path& s, const Path& t, double h);

// sum_{|w| <= depth} S^w(s) S^w(t) with a factorial tail bound.
KernelValue signature_kernel_series(const Path& s, const Path& t, int depth);

// GUE kernel through the route chosen by cfg.method; the path argument of
// every route is s followed by the reversal of t.
KernelValue gue_kernel(const Path& s, const Path& t, const KernelConfig& cfg);

// Any method, signature or GUE.
KernelValue kernel(const Path& s, const Path& t, const KernelConfig& cfg);

struct GramResult {
    std::vector<std::string> labels;
    Eigen::MatrixXd matrix;
    std::optional<Eigen::MatrixXd> std_error;
    double min_eigenvalue = 0.0;
};

// Upper triangle computed, lower mirrored. Entry (i, j) uses seed
// derive_seed(seed, i, j) unless cfg.shared_samples is set.
GramResult gram_matrix(const std::vector<Path>& paths, const std::vector<std::string>& labels,
                       const KernelConfig& cfg);

}  // namespace qsig
