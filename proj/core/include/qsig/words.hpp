#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qsig {

// A word over the letters 1..d. Ordered by length, then lexicographically.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) : letters_(letters) {}
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    static Word repeat(int letter, std::size_t count) { return Word(std::vector<int>(count, letter)); }

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word operator+(const Word& other) const;
    Word slice(std::size_t from, std::size_t to) const;
    Word rotated(std::size_t shift) const;
    std::size_t count(int letter) const;
    int max_letter() const;

    // True when every letter lies in [1, d].
    bool valid_for(int d) const;

    std::string to_string() const;  // "[1,2,1]"

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<int> letters_;
};

struct WordPair {
    Word left;
    Word right;
    bool operator==(const WordPair&) const = default;
};

// Pairs (a, b) with a < b over positions 1..2p.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;
    bool operator==(const Pairing&) const = default;
};

std::vector<Word> all_words(int d, int max_len);

std::vector<WordPair> free_difference_quotient(const Word& w, int i);

std::vector<Word> cyclic_derivative(const Word& w, int i);

// Throws InputError for odd n.
std::vector<Pairing> noncrossing_pairings(int n);

double semicircular_moment(const Word& w);

std::uint64_t catalan(int p);

// Number of words of length < len over d letters.
std::size_t word_offset(int d, int len);
std::size_t word_count(int d, int max_len);

// Position of w in all_words(d, ·) order.
std::size_t word_index(const Word& w, int d);
Word word_at(std::size_t index, int d);

}  // namespace qsig
