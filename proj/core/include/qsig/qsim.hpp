#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qsig/paths.hpp"
#include "qsig/pauli.hpp"

namespace qsig {

inline constexpr int kMaxQubits = 24;
inline constexpr int kDefaultTraceCap = 12;
inline constexpr int kDefaultDensityCap = 6;

// P_s(theta) = exp(i theta sigma_s).
struct Gate {
    PauliString s;
    double theta = 0.0;
};

// Gates apply in list order, so the unitary is G_last ... G_first.
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
};

// For each segment l, K repetitions of [for nu, for term i: P(increment_l^nu c_i / K)].
// Zero angles are kept.
Circuit build_trotter_circuit(const Path& path, const std::vector<SparsePauliOperator>& ops, int K);

class Statevector {
public:
    explicit Statevector(int n);  // |0...0>
    static Statevector basis(int n, std::uint64_t index);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::complex<double>& operator[](std::size_t i) { return amps_[i]; }
    std::complex<double> operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }
    double norm() const;

private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

// psi <- cos(theta) psi + i sin(theta) sigma_s psi. The string must be Hermitian.
void apply_pauli_rotation(Statevector& psi, const PauliString& s, double theta);
Statevector rotated(Statevector psi, const PauliString& s, double theta);

void apply_circuit(Statevector& psi, const Circuit& c);

// (1 / 2^n) sum_x <x|U|x>.
std::complex<double> circuit_trace_exact(const Circuit& c, int cap = kDefaultTraceCap);

// 1/2 (1 - Re tr U), clamped to [0, 1].
double dqc1_probability(const Circuit& c, int cap = kDefaultTraceCap);

// Dense unitary by columns.
Eigen::MatrixXcd circuit_unitary(const Circuit& c, int cap = 10);

struct QuantumParams {
    int m = 0;
    int n = 0;
    int K = 0;
    long long M = 0;
};

struct EstimatorOutput {
    double value = 0.0;         // Q = 1 - 2 T / M
    long long ones_count = 0;   // T
    long long shots = 0;        // M
    double std_error = 0.0;     // 2 sqrt(p (1 - p) / M) with p = T / M
    QuantumParams params;
    std::uint64_t seed = 0;
    std::optional<double> epsilon;
    std::optional<double> delta;
};

// Sufficient parameters: M > 2/eps^2 ln(2/delta), n >= max(6C/eps, log2(6C/eps)),
// m = n, K > 3 Delta^2 m / eps.
QuantumParams quantum_auto_params(double eps, double delta, double one_variation, double C = 1.0);

// One-clean-qubit shots on a fixed circuit: x uniform, outcome 1 with
// probability 1/2 (1 - Re <x|U|x>).
EstimatorOutput dqc1_estimate(const Circuit& c, long long M, std::uint64_t seed);

// The Trotter circuit drawn for a given shot of qsigker_run.
Circuit shot_circuit(const Path& path, const QuantumParams& p, std::uint64_t seed, long long shot);

// Each shot draws a fresh Pauli ensemble, a uniform basis state and the
// clean-qubit outcome.
EstimatorOutput qsigker_run(const Path& path, const QuantumParams& p, std::uint64_t seed);

// E[U|0><0|U^dagger] over `samples` ensemble draws.
Eigen::MatrixXcd quantum_path_signature(const Path& path, int m, int n, int K, int samples, std::uint64_t seed,
                                        int cap = kDefaultDensityCap);

}  // namespace qsig
