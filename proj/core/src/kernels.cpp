#include "qsig/kernels.hpp"

#include <cmath>

#include "qsig/ensembles.hpp"
#include "qsig/error.hpp"
#include "qsig/nclaw.hpp"
#include "qsig/parallel.hpp"

namespace qsig {

std::string to_string(KernelMethod m) {
    switch (m) {
        case KernelMethod::SignaturePde: return "signature-pde";
        case KernelMethod::SignatureSeries: return "signature-series";
        case KernelMethod::GueSeries: return "gue-series";
        case KernelMethod::GueIntegralEq: return "gue-integral-eq";
        case KernelMethod::GueClassicalMc: return "gue-classical-mc";
        case KernelMethod::GueQuantum: return "gue-quantum";
    }
    return "?";
}

KernelMethod parse_kernel_method(const std::string& name) {
    if (name == "signature-pde") return KernelMethod::SignaturePde;
    if (name == "signature-series") return KernelMethod::SignatureSeries;
    if (name == "gue-series") return KernelMethod::GueSeries;
    if (name == "gue-integral-eq") return KernelMethod::GueIntegralEq;
    if (name == "gue-classical-mc" || name == "classical-mc" || name == "mc") return KernelMethod::GueClassicalMc;
    if (name == "gue-quantum" || name == "quantum") return KernelMethod::GueQuantum;
    throw InputError("unknown kernel method '" + name + "'");
}

bool is_stochastic(KernelMethod m) { return m == KernelMethod::GueClassicalMc || m == KernelMethod::GueQuantum; }

namespace {

void check_dims(const Path& s, const Path& t) {
    if (s.dim() != t.dim()) throw InputError("kernel: path dimensions differ");
}

}  // namespace

double signature_kernel_pde(const Path& s, const Path& t, double h) {
    check_dims(s, t);
    const Path a = refine(s, h), b = refine(t, h);
    const int n = a.segments(), m = b.segments();
    const Eigen::MatrixXd C = a.increments().transpose() * b.increments();
    // Rolling rows: prev = k(i, .), cur = k(i+1, .).
    std::vector<double> prev(static_cast<std::size_t>(m) + 1, 1.0), cur(prev.size());
    for (int i = 0; i < n; ++i) {
        cur[0] = 1.0;
        for (int j = 0; j < m; ++j) {
            const double c = C(i, j);
            const auto J = static_cast<std::size_t>(j);
            cur[J + 1] = (cur[J] + prev[J + 1]) * (1.0 + 0.5 * c + c * c / 12.0) - prev[J] * (1.0 - c * c / 12.0);
        }
        std::swap(prev, cur);
    }
    return prev.back();
}

KernelValue signature_kernel_series(const Path& s, const Path& t, int depth) {
    check_dims(s, t);
    const TensorSeries a = truncated_signature(s, depth), b = truncated_signature(t, depth);
    std::vector<double> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
    KernelValue v;
    v.value = pairwise_sum(prod);
    const double x = one_variation(s) * one_variation(t);
    double term = 1.0;
    for (int n = 1; n <= depth; ++n) term *= x / (double(n) * n);
    for (int n = depth + 1; n <= depth + 400; ++n) {
        term *= x / (double(n) * n);
        v.tail_bound += term;
        if (term < 1e-300 || term < 1e-18 * v.tail_bound) break;
    }
    return v;
}

KernelValue gue_kernel(const Path& s, const Path& t, const KernelConfig& cfg) {
    check_dims(s, t);
    const Path path = concatenate(s, reverse(t));
    KernelValue v;
    switch (cfg.method) {
        case KernelMethod::GueSeries: {
            const NCLaw law = semicircular_law(path.dim(), cfg.depth);
            const auto dev = limiting_development(law, path, cfg.depth);
            v.value = dev.value.real();
            v.tail_bound = dev.tail_bound;
            return v;
        }
        case KernelMethod::GueIntegralEq:
            v.value = gue_integral_equation_solve(path, cfg.grid_h).terminal();
            return v;
        case KernelMethod::GueClassicalMc: {
            const auto r = classical_mc_estimate(path, cfg.matrix_n, cfg.mc_samples, cfg.mc_trotter_k, cfg.seed);
            v.value = r.value.real();
            v.std_error = r.std_error;
            return v;
        }
        case KernelMethod::GueQuantum: {
            const auto r = qsigker_run(path, cfg.quantum, cfg.seed);
            v.value = r.value;
            v.std_error = r.std_error;
            return v;
        }
        default:
            throw InputError("gue_kernel: " + to_string(cfg.method) + " is not a GUE route");
    }
}

KernelValue kernel(const Path& s, const Path& t, const KernelConfig& cfg) {
    switch (cfg.method) {
        case KernelMethod::SignaturePde: return {signature_kernel_pde(s, t, cfg.grid_h), std::nullopt, 0.0};
        case KernelMethod::SignatureSeries: return signature_kernel_series(s, t, cfg.depth);
        default: return gue_kernel(s, t, cfg);
    }
}

GramResult gram_matrix(const std::vector<Path>& paths, const std::vector<std::string>& labels,
                       const KernelConfig& cfg) {
    if (paths.empty()) throw InputError("gram_matrix: empty dataset");
    if (labels.size() != paths.size()) throw InputError("gram_matrix: one label per path required");
    for (const auto& p : paths)
        if (p.dim() != paths.front().dim()) throw InputError("gram_matrix: mixed path dimensions");
    const std::size_t n = paths.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    const auto vals = parallel_map(pairs.size(), [&](std::size_t e) {
        KernelConfig c = cfg;
        const auto [i, j] = pairs[e];
        if (!cfg.shared_samples) c.seed = derive_seed(cfg.seed, i, j);
        return kernel(paths[i], paths[j], c);
    });
    GramResult r;
    r.labels = labels;
    r.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const bool stochastic = is_stochastic(cfg.method);
    if (stochastic) r.std_error = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        const auto i = static_cast<Eigen::Index>(pairs[e].first), j = static_cast<Eigen::Index>(pairs[e].second);
        r.matrix(i, j) = r.matrix(j, i) = vals[e].value;
        if (stochastic) (*r.std_error)(i, j) = (*r.std_error)(j, i) = vals[e].std_error.value_or(0.0);
    }
    r.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.matrix, Eigen::EigenvaluesOnly).eigenvalues()(0);
    return r;
}

}  // namespace qsig
