#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "qsig/parallel.hpp"
#include "qsig/words.hpp"

namespace qsig {

// Single-qubit letters in (x, z) bit encoding: I=(0,0) X=(1,0) Y=(1,1) Z=(0,1).
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

// Product of single letters: a * b = i^phase * letter.
std::pair<int, Letter> pauli_mul(Letter a, Letter b);

// i^phase * sigma_{w_1} (x) ... (x) sigma_{w_n}. Letter q is qubit q; in
// statevectors qubit 0 is the most significant bit.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(int n);  // identity
    // "", "i", "-", "-i" prefix followed by n letters from IXYZ.
    static PauliString parse(const std::string& text);

    int n() const noexcept { return n_; }
    int phase() const noexcept { return phase_; }  // exponent of i, 0..3
    void set_phase(int e) noexcept { phase_ = ((e % 4) + 4) % 4; }
    Letter letter(int q) const;
    void set_letter(int q, Letter l);

    const std::vector<std::uint64_t>& x_bits() const noexcept { return x_; }
    const std::vector<std::uint64_t>& z_bits() const noexcept { return z_; }

    bool is_identity() const;  // ignores phase
    int count(Letter l) const;
    bool hermitian() const noexcept { return phase_ % 2 == 0; }

    // Same letters with phase +1.
    PauliString bare() const;
    std::string to_string() const;

    // Masks over statevector bit positions (qubit q -> bit n-1-q); n <= 64.
    std::uint64_t flip_mask() const;
    std::uint64_t z_mask() const;

    bool operator==(const PauliString&) const = default;

private:
    int n_ = 0;
    int phase_ = 0;
    std::vector<std::uint64_t> x_, z_;
};

PauliString string_mul(const PauliString& a, const PauliString& b);

// Normalized trace: the phase when every letter is I, else 0.
std::complex<double> string_trace(const PauliString& a);

// Dense 2^n x 2^n matrix, qubit 0 as the leftmost Kronecker factor.
Eigen::MatrixXcd to_dense(const PauliString& s);

struct PauliTerm {
    double c = 0.0;
    PauliString s;  // phase +1
};

class SparsePauliOperator {
public:
    SparsePauliOperator() = default;
    explicit SparsePauliOperator(int n) : n_(n) {}

    int n() const noexcept { return n_; }
    const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    // Adds c * s, merging with an existing equal string; exact zeros are removed.
    void add(double c, const PauliString& s);

    Eigen::MatrixXcd to_dense() const;

private:
    int n_ = 0;
    std::vector<PauliTerm> terms_;
};

// d operators (1/sqrt m) sum_i r_i sigma_i with uniform strings and
// Rademacher signs; repeated strings merged.
std::vector<SparsePauliOperator> sample_pauli_ensemble(int n, int m, int d, std::uint64_t seed);

using BigInt = boost::multiprecision::cpp_int;

// Words of length 2p over m letters in which each letter appears an even number of times.
BigInt count_even_words(int m, int p);
// Words of length 2p over m letters in which each used letter appears exactly twice.
BigInt count_pair_words(int m, int p);

// Normalized trace of A_{w_1} ... A_{w_k} for an operator tuple (n <= 64),
// computed in the string algebra.
std::complex<double> sparse_word_trace(const std::vector<SparsePauliOperator>& ops, const Word& w);

// Monte Carlo mean and standard error of tr(A_{w_1} ... A_{w_k}) over
// independent ensembles, real part. Sample s uses seed derive_seed(seed, s).
SampleStats ensemble_moment_estimate(int n, int m, const Word& w, int samples, std::uint64_t seed);

}  // namespace qsig
