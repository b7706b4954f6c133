#include "qsig/pauli.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "qsig/error.hpp"
#include "qsig/rng.hpp"

namespace qsig {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Phase exponent picked up by the letter-wise product of two bare strings.
inline int product_phase(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
    const std::uint64_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
    const std::uint64_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
    const std::uint64_t plus = (X1 & Y2) | (Y1 & Z2) | (Z1 & X2);
    const std::uint64_t minus = (X1 & Z2) | (Y1 & X2) | (Z1 & Y2);
    return std::popcount(plus) - std::popcount(minus);
}

inline int mod4(int e) { return ((e % 4) + 4) % 4; }

std::size_t words_for(int n) { return static_cast<std::size_t>((n + 63) / 64); }

}  // namespace

char letter_char(Letter l) {
    switch (l) {
        case Letter::I: return 'I';
        case Letter::X: return 'X';
        case Letter::Y: return 'Y';
        case Letter::Z: return 'Z';
    }
    return '?';
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I': return Letter::I;
        case 'X': return Letter::X;
        case 'Y': return Letter::Y;
        case 'Z': return Letter::Z;
        default: throw InputError(std::string("unknown Pauli letter '") + c + "'");
    }
}

std::pair<int, Letter> pauli_mul(Letter a, Letter b) {
    const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b);
    const int e = mod4(product_phase(ua & 1, ua >> 1, ub & 1, ub >> 1));
    return {e, static_cast<Letter>(ua ^ ub)};
}

PauliString::PauliString(int n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {
    if (n < 0) throw InputError("PauliString: n must be >= 0");
}

PauliString PauliString::parse(const std::string& text) {
    std::size_t pos = 0;
    int phase = 0;
    if (pos < text.size() && text[pos] == '-') {
        phase += 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    if (pos == text.size()) throw InputError("PauliString::parse: no letters in '" + text + "'");
    PauliString s(static_cast<int>(text.size() - pos));
    for (std::size_t q = 0; pos + q < text.size(); ++q) s.set_letter(static_cast<int>(q), letter_from_char(text[pos + q]));
    s.set_phase(phase);
    return s;
}

Letter PauliString::letter(int q) const {
    const auto w = static_cast<std::size_t>(q) / 64, b = static_cast<std::size_t>(q) % 64;
    const unsigned x = (x_[w] >> b) & 1u, z = (z_[w] >> b) & 1u;
    return static_cast<Letter>(x | (z << 1));
}

void PauliString::set_letter(int q, Letter l) {
    if (q < 0 || q >= n_) throw InputError("PauliString::set_letter: qubit out of range");
    const auto w = static_cast<std::size_t>(q) / 64, b = static_cast<std::size_t>(q) % 64;
    const auto u = static_cast<std::uint64_t>(l);
    x_[w] = (x_[w] & ~(1ULL << b)) | ((u & 1) << b);
    z_[w] = (z_[w] & ~(1ULL << b)) | ((u >> 1) << b);
}

bool PauliString::is_identity() const {
    for (std::size_t w = 0; w < x_.size(); ++w)
        if (x_[w] | z_[w]) return false;
    return true;
}

int PauliString::count(Letter l) const {
    int c = 0;
    for (int q = 0; q < n_; ++q) c += letter(q) == l;
    return c;
}

PauliString PauliString::bare() const {
    PauliString s(*this);
    s.phase_ = 0;
    return s;
}

std::string PauliString::to_string() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[phase_];
    for (int q = 0; q < n_; ++q) out += letter_char(letter(q));
    return out;
}

std::uint64_t PauliString::flip_mask() const {
    if (n_ > 64) throw ResourceError("PauliString: masks need n <= 64");
    std::uint64_t m = 0;
    for (int q = 0; q < n_; ++q)
        if ((x_[0] >> q) & 1u) m |= 1ULL << (n_ - 1 - q);
    return m;
}

std::uint64_t PauliString::z_mask() const {
    if (n_ > 64) throw ResourceError("PauliString: masks need n <= 64");
    std::uint64_t m = 0;
    for (int q = 0; q < n_; ++q)
        if ((z_[0] >> q) & 1u) m |= 1ULL << (n_ - 1 - q);
    return m;
}

PauliString string_mul(const PauliString& a, const PauliString& b) {
    if (a.n() != b.n()) throw InputError("string_mul: length mismatch");
    PauliString out(a.n());
    int e = a.phase() + b.phase();
    std::vector<std::uint64_t> x(a.x_bits().size()), z(a.z_bits().size());
    for (std::size_t w = 0; w < x.size(); ++w) {
        e += product_phase(a.x_bits()[w], a.z_bits()[w], b.x_bits()[w], b.z_bits()[w]);
        x[w] = a.x_bits()[w] ^ b.x_bits()[w];
        z[w] = a.z_bits()[w] ^ b.z_bits()[w];
    }
    for (int q = 0; q < a.n(); ++q) {
        const auto w = static_cast<std::size_t>(q) / 64, bit = static_cast<std::size_t>(q) % 64;
        out.set_letter(q, static_cast<Letter>(((x[w] >> bit) & 1u) | (((z[w] >> bit) & 1u) << 1)));
    }
    out.set_phase(e);
    return out;
}

std::complex<double> string_trace(const PauliString& a) {
    return a.is_identity() ? kIPow[a.phase()] : std::complex<double>(0.0);
}

Eigen::MatrixXcd to_dense(const PauliString& s) {
    if (s.n() > 14) throw ResourceError("to_dense: n too large");
    const std::uint64_t dim = 1ULL << s.n(), flip = s.flip_mask(), zm = s.z_mask();
    const std::complex<double> base = kIPow[mod4(s.phase() + s.count(Letter::Y))];
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t c = 0; c < dim; ++c) {
        const double sign = (std::popcount(c & zm) & 1) ? -1.0 : 1.0;
        M(static_cast<Eigen::Index>(c ^ flip), static_cast<Eigen::Index>(c)) = sign * base;
    }
    return M;
}

void SparsePauliOperator::add(double c, const PauliString& s) {
    if (s.n() != n_) throw InputError("SparsePauliOperator::add: qubit count mismatch");
    if (s.phase() % 2) throw InputError("SparsePauliOperator::add: imaginary phase would break hermiticity");
    const PauliString b = s.bare();
    const double coef = c * kIPow[s.phase()].real();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].s == b) {
            terms_[i].c += coef;
            if (terms_[i].c == 0.0) terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    }
    if (coef != 0.0) terms_.push_back({coef, b});
}

Eigen::MatrixXcd SparsePauliOperator::to_dense() const {
    if (n_ > 14) throw ResourceError("SparsePauliOperator::to_dense: n too large");
    const auto dim = static_cast<Eigen::Index>(1ULL << n_);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : terms_) M += t.c * qsig::to_dense(t.s);
    return M;
}

std::vector<SparsePauliOperator> sample_pauli_ensemble(int n, int m, int d, std::uint64_t seed) {
    if (n < 1 || m < 1 || d < 1) throw InputError("sample_pauli_ensemble: need n, m, d >= 1");
    Rng rng = make_rng(seed);
    std::uint64_t buffer = 0;
    int left = 0;
    auto bits = [&](int k) {
        if (left < k) {
            buffer = rng();
            left = 64;
        }
        const std::uint64_t v = buffer & ((1ULL << k) - 1);
        buffer >>= k;
        left -= k;
        return v;
    };
    const double mag = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<SparsePauliOperator> ops;
    ops.reserve(static_cast<std::size_t>(d));
    for (int nu = 0; nu < d; ++nu) {
        SparsePauliOperator A(n);
        for (int i = 0; i < m; ++i) {
            PauliString s(n);
            for (int q = 0; q < n; ++q) s.set_letter(q, static_cast<Letter>(bits(2)));
            const double sign = bits(1) ? -1.0 : 1.0;
            A.add(sign * mag, s);
        }
        ops.push_back(std::move(A));
    }
    return ops;
}

BigInt count_even_words(int m, int p) {
    if (m < 1 || p < 1) throw InputError("count_even_words: need m >= 1 and p >= 1");
    BigInt sum = 0, binom = 1;
    for (int k = 0; k <= m; ++k) {
        if (k > 0) binom = binom * (m - k + 1) / k;
        const BigInt base = m - 2 * k;
        sum += binom * boost::multiprecision::pow(base, static_cast<unsigned>(2 * p));
    }
    return sum >> m;
}

BigInt count_pair_words(int m, int p) {
    if (m < 1 || p < 0) throw InputError("count_pair_words: need m >= 1 and p >= 0");
    if (p > m) return 0;
    BigInt binom = 1;
    for (int k = 1; k <= p; ++k) binom = binom * (m - k + 1) / k;
    BigInt fact = 1;
    for (int k = 2; k <= 2 * p; ++k) fact *= k;
    return binom * fact >> p;
}

namespace {

struct Key {
    std::uint64_t x, z;
    bool operator==(const Key&) const = default;
};
struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return splitmix64(k.x * 0x9e3779b97f4a7c15ULL ^ k.z); }
};
using TermMap = std::unordered_map<Key, std::complex<double>, KeyHash>;

TermMap product(const std::vector<SparsePauliOperator>& ops, const Word& w, std::size_t from, std::size_t to) {
    TermMap cur{{Key{0, 0}, 1.0}};
    for (std::size_t p = from; p < to; ++p) {
        const auto& A = ops[static_cast<std::size_t>(w[p] - 1)];
        TermMap next;
        next.reserve(cur.size() * A.size());
        for (const auto& [k, c] : cur) {
            for (const auto& t : A.terms()) {
                const std::uint64_t x2 = t.s.x_bits()[0], z2 = t.s.z_bits()[0];
                const int e = mod4(product_phase(k.x, k.z, x2, z2));
                next[Key{k.x ^ x2, k.z ^ z2}] += c * t.c * kIPow[e];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::complex<double> sparse_word_trace(const std::vector<SparsePauliOperator>& ops, const Word& w) {
    if (!w.valid_for(static_cast<int>(ops.size()))) throw InputError("sparse_word_trace: word uses a missing operator");
    if (!ops.empty() && ops.front().n() > 64) throw ResourceError("sparse_word_trace: n must be <= 64");
    const std::size_t h = w.length() / 2;
    const TermMap L = product(ops, w, 0, h);
    const TermMap R = product(ops, w, h, w.length());
    // sigma_k sigma_k = I for bare strings, so tr(LR) pairs equal keys.
    std::complex<double> tr = 0.0;
    for (const auto& [k, c] : L) {
        const auto it = R.find(k);
        if (it != R.end()) tr += c * it->second;
    }
    return tr;
}

SampleStats ensemble_moment_estimate(int n, int m, const Word& w, int samples, std::uint64_t seed) {
    if (samples < 1) throw InputError("ensemble_moment_estimate: samples must be >= 1");
    const int d = std::max(1, w.max_letter());
    const auto vals = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t s) {
        const auto ops = sample_pauli_ensemble(n, m, d, derive_seed(seed, s));
        return sparse_word_trace(ops, w).real();
    });
    return sample_stats(vals);
}

}  // namespace qsig
