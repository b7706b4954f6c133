#include "qsig/ensembles.hpp"

#include <cmath>
#include <random>

#include "qsig/error.hpp"
#include "qsig/parallel.hpp"
#include "qsig/rng.hpp"

extern "C" void dsterf_(const int* n, double* d, double* e, int* info);

namespace qsig {

HermitianTuple sample_gue(int N, int d, std::uint64_t seed) {
    if (N < 1 || d < 1) throw InputError("sample_gue: need N >= 1 and d >= 1");
    Rng rng = make_rng(seed);
    std::normal_distribution<double> diag(0.0, std::sqrt(1.0 / N));
    std::normal_distribution<double> off(0.0, std::sqrt(0.5 / N));
    HermitianTuple t{N, {}};
    t.matrices.reserve(static_cast<std::size_t>(d));
    for (int nu = 0; nu < d; ++nu) {
        CMatrix A(N, N);
        for (int j = 0; j < N; ++j) {
            A(j, j) = diag(rng);
            for (int i = j + 1; i < N; ++i) {
                const double re = off(rng), im = off(rng);
                A(i, j) = {re, im};
                A(j, i) = {re, -im};
            }
        }
        t.matrices.push_back(std::move(A));
    }
    return t;
}

Eigen::VectorXd sample_gue_eigenvalues(int N, std::uint64_t seed) {
    if (N < 1) throw InputError("sample_gue_eigenvalues: need N >= 1");
    Rng rng = make_rng(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd diag(N), sub(std::max(N - 1, 1));
    for (int i = 0; i < N; ++i) diag[i] = gauss(rng) * scale;
    // Subdiagonal k (k = N-1 .. 1) is chi_{2k} / sqrt(2) = sqrt(Gamma(k, 1)).
    for (int i = 0; i + 1 < N; ++i) {
        std::gamma_distribution<double> gam(static_cast<double>(N - 1 - i), 1.0);
        sub[i] = std::sqrt(gam(rng)) * scale;
    }
    int info = 0;
    dsterf_(&N, diag.data(), sub.data(), &info);
    if (info != 0) throw ConvergenceError("sample_gue_eigenvalues: tridiagonal QL iteration failed", {});
    return diag;
}

std::complex<double> normalized_trace(const CMatrix& m) { return m.trace() / static_cast<double>(m.rows()); }

namespace {

CMatrix generator(const HermitianTuple& t, const Eigen::VectorXd& inc) {
    CMatrix H = CMatrix::Zero(t.N, t.N);
    for (int nu = 0; nu < t.d(); ++nu)
        if (inc[nu] != 0.0) H += inc[nu] * t.matrices[static_cast<std::size_t>(nu)];
    return H;
}

void check_dims(const HermitianTuple& t, const Path& path) {
    if (t.d() != path.dim()) throw InputError("development: path dimension differs from ensemble count");
}

CMatrix power(CMatrix base, int K) {
    CMatrix result = CMatrix::Identity(base.rows(), base.cols());
    bool first = true;
    while (K > 0) {
        if (K & 1) {
            result = first ? base : CMatrix(result * base);
            first = false;
        }
        K >>= 1;
        if (K) base = base * base;
    }
    return result;
}

std::complex<double> scalar_power(std::complex<double> base, int K) {
    std::complex<double> result = 1.0;
    while (K > 0) {
        if (K & 1) result *= base;
        K >>= 1;
        if (K) base *= base;
    }
    return result;
}

}  // namespace

CMatrix develop_exact(const HermitianTuple& t, const Path& path) {
    check_dims(t, path);
    CMatrix U = CMatrix::Identity(t.N, t.N);
    for (int l = 0; l < path.segments(); ++l) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(generator(t, path.increment(l)));
        const Eigen::VectorXcd phase = (std::complex<double>(0, 1) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
        const CMatrix& V = es.eigenvectors();
        U = U * (V * phase.asDiagonal() * V.adjoint());
    }
    return U;
}

CMatrix develop_truncated(const HermitianTuple& t, const Path& path, int K) {
    check_dims(t, path);
    if (K < 1) throw InputError("develop_truncated: K must be >= 1");
    CMatrix U = CMatrix::Identity(t.N, t.N);
    for (int l = 0; l < path.segments(); ++l) {
        CMatrix F = CMatrix::Identity(t.N, t.N) + std::complex<double>(0, 1.0 / K) * generator(t, path.increment(l));
        U = U * power(std::move(F), K);
    }
    return U;
}

DevelopmentResult classical_mc_estimate(const Path& path, int N, int M, int K, std::uint64_t seed,
                                        const McOptions& opts) {
    if (N < 1) throw InputError("classical_mc_estimate: N must be >= 1");
    if (M < 2) throw InputError("classical_mc_estimate: M must be >= 2");
    if (K < 0) throw InputError("classical_mc_estimate: K must be >= 0");
    DevelopmentResult r;
    r.params = {N, M, K, seed};
    r.samples = M;
    if (path.segments() == 0) {
        r.value = 1.0;
        return r;
    }
    const bool fast = opts.tridiagonal_fast_path && path.dim() == 1;
    std::vector<double> inc(static_cast<std::size_t>(path.segments()));
    for (int l = 0; l < path.segments(); ++l) inc[static_cast<std::size_t>(l)] = path.increments()(0, l);

    auto one = [&](std::size_t i) -> std::complex<double> {
        const std::uint64_t s = derive_seed(seed, i);
        if (fast) {
            const Eigen::VectorXd lam = sample_gue_eigenvalues(N, s);
            std::vector<std::complex<double>> terms(static_cast<std::size_t>(N));
            for (int a = 0; a < N; ++a) {
                std::complex<double> f = 1.0;
                for (double x : inc) {
                    if (K == 0)
                        f *= std::exp(std::complex<double>(0, x * lam[a]));
                    else
                        f *= scalar_power(std::complex<double>(1.0, x * lam[a] / K), K);
                }
                terms[static_cast<std::size_t>(a)] = f;
            }
            return pairwise_sum(terms) / static_cast<double>(N);
        }
        const HermitianTuple t = sample_gue(N, path.dim(), s);
        return normalized_trace(K == 0 ? develop_exact(t, path) : develop_truncated(t, path, K));
    };
    const auto vals = parallel_map(static_cast<std::size_t>(M), one);
    std::vector<double> re(vals.size()), im(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        re[i] = vals[i].real();
        im[i] = vals[i].imag();
    }
    const SampleStats sr = sample_stats(re), si = sample_stats(im);
    r.value = {sr.mean, si.mean};
    r.std_error = sr.std_error;
    r.std_error_imag = si.std_error;
    return r;
}

DevelopmentResult finite_n_kernel(const Path& s, const Path& t, int N, int M, int K, std::uint64_t seed,
                                  const McOptions& opts) {
    if (s.dim() != t.dim()) throw InputError("finite_n_kernel: dimension mismatch");
    return classical_mc_estimate(concatenate(s, reverse(t)), N, M, K, seed, opts);
}

McParams classical_auto_params(double eps, double delta, double one_variation, std::uint64_t seed) {
    if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0)) throw InputError("classical_auto_params: need eps > 0, 0 < delta < 1");
    const double e2 = std::exp(2.0 * one_variation);
    McParams p;
    p.M = static_cast<int>(std::floor(2.0 / (eps * eps) * std::log(2.0 / delta))) + 1;
    p.N = static_cast<int>(std::floor(e2 / (eps * eps))) + 1;
    p.K = static_cast<int>(std::floor(one_variation * e2 / eps)) + 1;
    p.seed = seed;
    return p;
}

}  // namespace qsig
