#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "qsig/error.hpp"
#include "qsig/words.hpp"

using namespace qsig;

TEST(AllWords, SmallEnumerations) {
    EXPECT_EQ(all_words(1, 2), (std::vector<Word>{Word{}, Word{1}, Word{1, 1}}));
    EXPECT_EQ(all_words(2, 1), (std::vector<Word>{Word{}, Word{1}, Word{2}}));
    EXPECT_EQ(all_words(2, 3).size(), 1u + 2u + 4u + 8u);
}

TEST(AllWords, SortedAndIndexed) {
    for (int d = 1; d <= 3; ++d) {
        const auto ws = all_words(d, 4);
        EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
        for (std::size_t i = 0; i < ws.size(); ++i) {
            EXPECT_EQ(word_index(ws[i], d), i);
            EXPECT_EQ(word_at(i, d), ws[i]);
        }
    }
}

TEST(AllWords, RejectsBadArguments) {
    EXPECT_THROW(all_words(0, 2), InputError);
    EXPECT_THROW(all_words(2, -1), InputError);
}

TEST(FreeDifferenceQuotient, Examples) {
    EXPECT_EQ(free_difference_quotient(Word{1}, 1), (std::vector<WordPair>{{Word{}, Word{}}}));
    EXPECT_EQ(free_difference_quotient(Word{1, 2, 1}, 1),
              (std::vector<WordPair>{{Word{}, Word{2, 1}}, {Word{1, 2}, Word{}}}));
    EXPECT_TRUE(free_difference_quotient(Word{2, 2}, 1).empty());
}

TEST(CyclicDerivative, Examples) {
    EXPECT_EQ(cyclic_derivative(Word{1, 1}, 1), (std::vector<Word>{Word{1}, Word{1}}));
    EXPECT_EQ(cyclic_derivative(Word{1, 2}, 2), (std::vector<Word>{Word{1}}));
    EXPECT_EQ(cyclic_derivative(Word{1, 1, 1, 1}, 1), std::vector<Word>(4, Word{1, 1, 1}));
    EXPECT_EQ(cyclic_derivative(Word{1, 2, 3}, 2), (std::vector<Word>{Word{3, 1}}));
}

TEST(WordProperties, DerivativeShapes) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Word w = gen::word(rng, d, gen::uniform_int(rng, 0, 8));
        const int i = gen::uniform_int(rng, 1, d);
        const auto fdq = free_difference_quotient(w, i);
        ASSERT_EQ(fdq.size(), w.count(i));
        for (const auto& [u, v] : fdq) {
            EXPECT_EQ(u.length() + v.length() + 1, w.length());
            EXPECT_EQ(u + Word{i} + v, w);
        }
        for (const auto& c : cyclic_derivative(w, i)) EXPECT_EQ(c.length() + 1, w.length());
    }
}

TEST(NoncrossingPairings, Examples) {
    const auto p2 = noncrossing_pairings(2);
    ASSERT_EQ(p2.size(), 1u);
    EXPECT_EQ(p2[0].pairs, (std::vector<std::pair<int, int>>{{1, 2}}));
    const auto p4 = noncrossing_pairings(4);
    ASSERT_EQ(p4.size(), 2u);
    std::vector<std::vector<std::pair<int, int>>> got;
    for (const auto& p : p4) got.push_back(p.pairs);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::noncrossing_by_filter(4));
    EXPECT_EQ(noncrossing_pairings(6).size(), oracle::noncrossing_by_filter(6).size());
    EXPECT_EQ(noncrossing_pairings(0).size(), 1u);
}

TEST(NoncrossingPairings, OddIsError) {
    EXPECT_THROW(noncrossing_pairings(3), InputError);
}

TEST(NoncrossingPairings, CatalanCountsAndStructure) {
    for (int p = 0; p <= 8; ++p) {
        const auto ps = noncrossing_pairings(2 * p);
        EXPECT_EQ(ps.size(), catalan(p)) << "p=" << p;
        if (p <= 5) {
            for (const auto& pr : ps) {
                EXPECT_FALSE(oracle::crossing(pr.pairs));
                std::vector<int> seen(static_cast<std::size_t>(2 * p) + 1, 0);
                for (const auto& [a, b] : pr.pairs) {
                    EXPECT_LT(a, b);
                    ++seen[static_cast<std::size_t>(a)];
                    ++seen[static_cast<std::size_t>(b)];
                }
                for (int k = 1; k <= 2 * p; ++k) EXPECT_EQ(seen[static_cast<std::size_t>(k)], 1);
            }
        }
    }
}

TEST(NoncrossingPairings, MatchesFilterUpToTen) {
    for (int n = 0; n <= 10; n += 2) {
        std::vector<std::vector<std::pair<int, int>>> got;
        for (const auto& p : noncrossing_pairings(n)) got.push_back(p.pairs);
        std::sort(got.begin(), got.end());
        auto want = oracle::noncrossing_by_filter(n);
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << "n=" << n;
    }
}

TEST(SemicircularMoment, Examples) {
    EXPECT_EQ(semicircular_moment(Word{1, 2, 1, 2}), 0.0);
    EXPECT_EQ(semicircular_moment(Word{1, 1, 2, 2}), 1.0);
    EXPECT_EQ(semicircular_moment(Word{1, 1, 1, 1}), 2.0);
    EXPECT_EQ(semicircular_moment(Word{}), 1.0);
    EXPECT_EQ(semicircular_moment(Word{1, 1, 1}), 0.0);
}

TEST(SemicircularMoment, PowersAreCatalan) {
    for (int p = 0; p <= 8; ++p)
        EXPECT_EQ(semicircular_moment(Word::repeat(1, static_cast<std::size_t>(2 * p))), static_cast<double>(catalan(p)));
}

TEST(SemicircularMoment, MatchesBruteForceAndIsTracial) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Word w = gen::word(rng, d, gen::uniform_int(rng, 0, 8));
        const double m = semicircular_moment(w);
        EXPECT_EQ(m, oracle::semicircular_moment_bruteforce(w)) << w.to_string();
        for (std::size_t r = 1; r < w.length(); ++r) EXPECT_EQ(semicircular_moment(w.rotated(r)), m) << w.to_string();
    }
}
