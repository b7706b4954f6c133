#include "qsig/words.hpp"

#include <algorithm>
#include <sstream>

#include "qsig/error.hpp"

namespace qsig {

Word Word::operator+(const Word& other) const {
    std::vector<int> out(letters_);
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                 letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::rotated(std::size_t shift) const {
    if (letters_.empty()) return *this;
    std::vector<int> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Word(std::move(out));
}

std::size_t Word::count(int letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

int Word::max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

bool Word::valid_for(int d) const {
    return std::all_of(letters_.begin(), letters_.end(), [d](int c) { return c >= 1 && c <= d; });
}

std::string Word::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ',';
        os << letters_[i];
    }
    os << ']';
    return os.str();
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                  other.letters_.end());
}

std::size_t word_offset(int d, int len) {
    std::size_t total = 0, level = 1;
    for (int k = 0; k < len; ++k) {
        total += level;
        level *= static_cast<std::size_t>(d);
    }
    return total;
}

std::size_t word_count(int d, int max_len) { return word_offset(d, max_len + 1); }

std::size_t word_index(const Word& w, int d) {
    std::size_t idx = 0;
    for (int c : w) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(c - 1);
    return word_offset(d, static_cast<int>(w.length())) + idx;
}

Word word_at(std::size_t index, int d) {
    int len = 0;
    std::size_t level = 1;
    while (index >= level) {
        index -= level;
        level *= static_cast<std::size_t>(d);
        ++len;
    }
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int k = len - 1; k >= 0; --k) {
        letters[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(d)) + 1;
        index /= static_cast<std::size_t>(d);
    }
    return Word(std::move(letters));
}

std::vector<Word> all_words(int d, int max_len) {
    if (d < 1 || max_len < 0) throw InputError("all_words: need d >= 1 and max_len >= 0");
    const std::size_t n = word_count(d, max_len);
    std::vector<Word> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(word_at(i, d));
    return out;
}

std::vector<WordPair> free_difference_quotient(const Word& w, int i) {
    std::vector<WordPair> out;
    for (std::size_t p = 0; p < w.length(); ++p)
        if (w[p] == i) out.push_back({w.slice(0, p), w.slice(p + 1, w.length())});
    return out;
}

std::vector<Word> cyclic_derivative(const Word& w, int i) {
    std::vector<Word> out;
    for (std::size_t p = 0; p < w.length(); ++p)
        if (w[p] == i) out.push_back(w.slice(p + 1, w.length()) + w.slice(0, p));
    return out;
}

namespace {

// Pairs the first free position with each admissible partner; a partner
// is admissible when the enclosed block has even size.
void build_pairings(int lo, int hi, std::vector<std::pair<int, int>>& cur, std::vector<Pairing>& out,
                    const std::vector<std::pair<int, int>>& rest_blocks) {
    if (lo > hi) {
        if (rest_blocks.empty()) {
            Pairing p{cur};
            std::sort(p.pairs.begin(), p.pairs.end());
            out.push_back(std::move(p));
            return;
        }
        auto next = rest_blocks;
        auto [a, b] = next.back();
        next.pop_back();
        build_pairings(a, b, cur, out, next);
        return;
    }
    for (int k = lo + 1; k <= hi; k += 2) {
        cur.emplace_back(lo, k);
        auto next = rest_blocks;
        if (k + 1 <= hi) next.emplace_back(k + 1, hi);
        build_pairings(lo + 1, k - 1, cur, out, next);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Pairing> noncrossing_pairings(int n) {
    if (n < 0 || n % 2 != 0) throw InputError("noncrossing_pairings: n must be even and non-negative");
    std::vector<Pairing> out;
    std::vector<std::pair<int, int>> cur;
    build_pairings(1, n, cur, out, {});
    return out;
}

double semicircular_moment(const Word& w) {
    const std::size_t n = w.length();
    if (n % 2) return 0.0;
    if (n == 0) return 1.0;
    // M[i][j]: letter-matched non-crossing pairings of positions i..j-1.
    std::vector<std::vector<double>> M(n + 1, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i <= n; ++i) M[i][i] = 1.0;
    for (std::size_t len = 2; len <= n; len += 2) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            double s = 0.0;
            for (std::size_t k = i + 1; k < j; k += 2)
                if (w[i] == w[k]) s += M[i + 1][k] * M[k + 1][j];
            M[i][j] = s;
        }
    }
    return M[0][n];
}

std::uint64_t catalan(int p) {
    if (p < 0) return 0;
    std::uint64_t c = 1;
    for (int k = 0; k < p; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
    return c;
}

}  // namespace qsig
