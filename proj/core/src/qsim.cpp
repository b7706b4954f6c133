#include "qsig/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qsig/error.hpp"
#include "qsig/parallel.hpp"
#include "qsig/rng.hpp"

namespace qsig {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct Compiled {
    std::uint64_t flip = 0;
    std::uint64_t z = 0;
    std::complex<double> ph = 1.0;  // i^{phase + #Y}
    double c = 1.0;
    double s = 0.0;
};

Compiled compile(const PauliString& str, double theta) {
    if (!str.hermitian()) throw InputError("Pauli rotation needs a Hermitian string (phase +-1)");
    Compiled g;
    g.flip = str.flip_mask();
    g.z = str.z_mask();
    g.ph = kIPow[(str.phase() + str.count(Letter::Y)) % 4];
    g.c = std::cos(theta);
    g.s = std::sin(theta);
    return g;
}

inline double parity_sign(std::uint64_t b) { return (std::popcount(b) & 1) ? -1.0 : 1.0; }

void apply(std::complex<double>* amp, std::uint64_t dim, const Compiled& g) {
    const std::complex<double> is(0.0, g.s);
    if (g.flip == 0) {
        for (std::uint64_t b = 0; b < dim; ++b) amp[b] *= g.c + is * (g.ph * parity_sign(b & g.z));
        return;
    }
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(g.flip));
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & pivot) continue;
        const std::uint64_t bp = b ^ g.flip;
        const std::complex<double> cb = g.ph * parity_sign(b & g.z), cbp = g.ph * parity_sign(bp & g.z);
        const std::complex<double> u = amp[b], v = amp[bp];
        amp[b] = g.c * u + is * cbp * v;
        amp[bp] = g.c * v + is * cb * u;
    }
}

void check_qubits(int n, int cap) {
    if (n < 1) throw InputError("circuit: n must be >= 1");
    if (n > std::min(cap, kMaxQubits))
        throw ResourceError("statevector of " + std::to_string(n) + " qubits exceeds cap " +
                            std::to_string(std::min(cap, kMaxQubits)));
}

std::vector<Compiled> compile(const Circuit& c) {
    std::vector<Compiled> out;
    out.reserve(c.gates.size());
    for (const auto& g : c.gates) {
        if (g.s.n() != c.n) throw InputError("circuit: gate string length differs from n");
        if (g.theta != 0.0) out.push_back(compile(g.s, g.theta));
    }
    return out;
}

std::complex<double> diagonal_element(const std::vector<Compiled>& gates, int n, std::uint64_t x) {
    Statevector psi = Statevector::basis(n, x);
    for (const auto& g : gates) apply(&psi[0], psi.size(), g);
    return psi[x];
}

}  // namespace

Circuit build_trotter_circuit(const Path& path, const std::vector<SparsePauliOperator>& ops, int K) {
    if (K < 1) throw InputError("build_trotter_circuit: K must be >= 1");
    if (static_cast<int>(ops.size()) != path.dim())
        throw InputError("build_trotter_circuit: operator count differs from path dimension");
    Circuit c;
    c.n = ops.empty() ? 0 : ops.front().n();
    for (const auto& A : ops)
        if (A.n() != c.n) throw InputError("build_trotter_circuit: operators disagree on n");
    for (int l = 0; l < path.segments(); ++l)
        for (int r = 0; r < K; ++r)
            for (int nu = 0; nu < path.dim(); ++nu)
                for (const auto& t : ops[static_cast<std::size_t>(nu)].terms())
                    c.gates.push_back({t.s, path.increments()(nu, l) * t.c / K});
    return c;
}

Statevector::Statevector(int n) : n_(n) {
    check_qubits(n, kMaxQubits);
    amps_.assign(std::size_t{1} << n, 0.0);
    amps_[0] = 1.0;
}

Statevector Statevector::basis(int n, std::uint64_t index) {
    Statevector s(n);
    if (index >= s.size()) throw InputError("Statevector::basis: index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void apply_pauli_rotation(Statevector& psi, const PauliString& s, double theta) {
    if (s.n() != psi.n()) throw InputError("apply_pauli_rotation: qubit count mismatch");
    apply(&psi[0], psi.size(), compile(s, theta));
}

Statevector rotated(Statevector psi, const PauliString& s, double theta) {
    apply_pauli_rotation(psi, s, theta);
    return psi;
}

void apply_circuit(Statevector& psi, const Circuit& c) {
    if (c.n != psi.n()) throw InputError("apply_circuit: qubit count mismatch");
    for (const auto& g : compile(c)) apply(&psi[0], psi.size(), g);
}

std::complex<double> circuit_trace_exact(const Circuit& c, int cap) {
    check_qubits(c.n, cap);
    const auto gates = compile(c);
    const std::uint64_t dim = std::uint64_t{1} << c.n;
    const auto diag = parallel_map(dim, [&](std::size_t x) { return diagonal_element(gates, c.n, x); });
    return pairwise_sum(diag) / static_cast<double>(dim);
}

double dqc1_probability(const Circuit& c, int cap) {
    const double p = 0.5 * (1.0 - circuit_trace_exact(c, cap).real());
    return std::clamp(p, 0.0, 1.0);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c, int cap) {
    check_qubits(c.n, cap);
    const auto gates = compile(c);
    const std::uint64_t dim = std::uint64_t{1} << c.n;
    Eigen::MatrixXcd U(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        Statevector psi = Statevector::basis(c.n, x);
        for (const auto& g : gates) apply(&psi[0], psi.size(), g);
        for (std::uint64_t r = 0; r < dim; ++r) U(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = psi[r];
    }
    return U;
}

QuantumParams quantum_auto_params(double eps, double delta, double one_variation, double C) {
    if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0) || !(C > 0.0))
        throw InputError("quantum_auto_params: need eps > 0, 0 < delta < 1, C > 0");
    QuantumParams p;
    p.M = static_cast<long long>(std::floor(2.0 / (eps * eps) * std::log(2.0 / delta))) + 1;
    const double t = 6.0 * C / eps;
    p.n = std::max(1, static_cast<int>(std::ceil(std::max(t, std::log2(t)) - 1e-12)));
    p.m = p.n;
    p.K = static_cast<int>(std::floor(3.0 * one_variation * one_variation * p.m / eps)) + 1;
    return p;
}

namespace {

EstimatorOutput finish(long long ones, long long M) {
    EstimatorOutput out;
    out.ones_count = ones;
    out.shots = M;
    out.value = 1.0 - 2.0 * static_cast<double>(ones) / static_cast<double>(M);
    const double p = static_cast<double>(ones) / static_cast<double>(M);
    out.std_error = 2.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(M));
    return out;
}

bool shot_outcome(const std::vector<Compiled>& gates, int n, Rng& rng) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, dim - 1)(rng);
    const double p = std::clamp(0.5 * (1.0 - diagonal_element(gates, n, x).real()), 0.0, 1.0);
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

EstimatorOutput dqc1_estimate(const Circuit& c, long long M, std::uint64_t seed) {
    if (M < 1) throw InputError("dqc1_estimate: M must be >= 1");
    check_qubits(c.n, kMaxQubits);
    const auto gates = compile(c);
    const auto ones = parallel_map(static_cast<std::size_t>(M), [&](std::size_t s) {
        Rng rng = make_rng(seed, s);
        return shot_outcome(gates, c.n, rng) ? 1 : 0;
    });
    long long T = 0;
    for (int o : ones) T += o;
    EstimatorOutput out = finish(T, M);
    out.params = {0, c.n, 0, M};
    out.seed = seed;
    return out;
}

Circuit shot_circuit(const Path& path, const QuantumParams& p, std::uint64_t seed, long long shot) {
    const auto ops = sample_pauli_ensemble(p.n, p.m, path.dim(), derive_seed(seed, static_cast<std::uint64_t>(shot), 0));
    return build_trotter_circuit(path, ops, p.K);
}

EstimatorOutput qsigker_run(const Path& path, const QuantumParams& p, std::uint64_t seed) {
    if (p.m < 1 || p.K < 1 || p.M < 1) throw InputError("qsigker_run: m, K and M must be >= 1");
    check_qubits(p.n, kMaxQubits);
    const auto ones = parallel_map(static_cast<std::size_t>(p.M), [&](std::size_t s) {
        const auto gates = compile(shot_circuit(path, p, seed, static_cast<long long>(s)));
        Rng rng = make_rng(derive_seed(seed, s, 1));
        return shot_outcome(gates, p.n, rng) ? 1 : 0;
    });
    long long T = 0;
    for (int o : ones) T += o;
    EstimatorOutput out = finish(T, p.M);
    out.params = p;
    out.seed = seed;
    return out;
}

Eigen::MatrixXcd quantum_path_signature(const Path& path, int m, int n, int K, int samples, std::uint64_t seed,
                                        int cap) {
    check_qubits(n, cap);
    if (samples < 1) throw InputError("quantum_path_signature: samples must be >= 1");
    const QuantumParams p{m, n, K, samples};
    const auto rhos = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t s) {
        Statevector psi(n);
        apply_circuit(psi, shot_circuit(path, p, seed, static_cast<long long>(s)));
        const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.size()));
        return Eigen::MatrixXcd(v * v.adjoint());
    });
    return pairwise_sum(rhos) / static_cast<double>(samples);
}

}  // namespace qsig
