#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qsig/paths.hpp"

namespace qsig {

using CMatrix = Eigen::MatrixXcd;

struct HermitianTuple {
    int N = 0;
    std::vector<CMatrix> matrices;
    int d() const noexcept { return static_cast<int>(matrices.size()); }
};

// GUE with E tr(A^2) = 1 under the normalized trace tr = Tr / N:
// diagonal N(0, 1/N), off-diagonal real and imaginary parts N(0, 1/(2N)).
HermitianTuple sample_gue(int N, int d, std::uint64_t seed);

// Eigenvalues of one GUE draw via the beta = 2 tridiagonal model, which has
// the same joint eigenvalue law as sample_gue. Ascending order.
Eigen::VectorXd sample_gue_eigenvalues(int N, std::uint64_t seed);

// Normalized trace Tr / N.
std::complex<double> normalized_trace(const CMatrix& m);

// U_1 U_2 ... U_L with U_l = exp(i sum_nu increment_l^nu A_nu).
CMatrix develop_exact(const HermitianTuple& t, const Path& path);

// Same ordering with each factor replaced by (I + i H_l / K)^K.
CMatrix develop_truncated(const HermitianTuple& t, const Path& path, int K);

struct McParams {
    int N = 0;
    int M = 0;
    int K = 0;  // 0 selects the exact development
    std::uint64_t seed = 0;
};

struct DevelopmentResult {
    std::complex<double> value;
    double std_error = 0.0;       // of the real part
    double std_error_imag = 0.0;  // of the imaginary part
    int samples = 0;
    McParams params;
};

struct McOptions {
    // For d = 1 use the tridiagonal eigenvalue model instead of dense draws.
    bool tridiagonal_fast_path = true;
};

// Mean and standard error of tr(develop) over M GUE draws. Sample i uses
// seed derive_seed(seed, i).
DevelopmentResult classical_mc_estimate(const Path& path, int N, int M, int K, std::uint64_t seed,
                                        const McOptions& opts = {});

// classical_mc_estimate on s followed by the reversal of t.
DevelopmentResult finite_n_kernel(const Path& s, const Path& t, int N, int M, int K, std::uint64_t seed,
                                  const McOptions& opts = {});

// Sufficient sizes for accuracy eps with confidence 1 - delta:
// M > 2/eps^2 log(2/delta), N > e^{2 Delta}/eps^2, K > Delta e^{2 Delta}/eps.
McParams classical_auto_params(double eps, double delta, double one_variation, std::uint64_t seed = 0);

}  // namespace qsig
