#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "qsig/error.hpp"
#include "qsig/paths.hpp"

using namespace qsig;

namespace {

Path line(double T) {
    Eigen::MatrixXd m(1, 1);
    m << T;
    return Path::from_increments(m);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST(FromSamples, RebasesAndDropsZeroSegments) {
    const Path a = Path::from_samples({0, 1}, {{3}, {4}});
    ASSERT_EQ(a.segments(), 1);
    EXPECT_EQ(a.increments()(0, 0), 1.0);

    const Path b = Path::from_samples({0, 1, 2}, {{0, 0}, {1, 0}, {1, 1}});
    ASSERT_EQ(b.segments(), 2);
    EXPECT_EQ(b.increment(0), Eigen::Vector2d(1, 0));
    EXPECT_EQ(b.increment(1), Eigen::Vector2d(0, 1));

    const Path c = Path::from_samples({0, 1, 2}, {{0}, {0}, {1}});
    ASSERT_EQ(c.segments(), 1);
    EXPECT_EQ(c.increments()(0, 0), 1.0);
    EXPECT_EQ(c.knots().size(), 2u);
}

TEST(FromSamples, Errors) {
    EXPECT_THROW(Path::from_samples({0}, {{1}}), InputError);
    EXPECT_THROW(Path::from_samples({0, 0}, {{1}, {2}}), InputError);
    EXPECT_THROW(Path::from_samples({1, 0}, {{1}, {2}}), InputError);
    EXPECT_THROW(Path::from_samples({0, 1}, {{1}, {2, 3}}), InputError);
}

TEST(Concatenate, IncrementsAndKnots) {
    const Path ab = concatenate(line(1), line(2));
    ASSERT_EQ(ab.segments(), 2);
    EXPECT_EQ(ab.increments()(0, 0), 1.0);
    EXPECT_EQ(ab.increments()(0, 1), 2.0);
    EXPECT_EQ(ab.knots().front(), 0.0);
    EXPECT_EQ(ab.knots().back(), 1.0);

    gen::Rng rng(1);
    EXPECT_EQ(concatenate(gen::path(rng, 2, 2), gen::path(rng, 2, 3)).segments(), 5);
    EXPECT_THROW(concatenate(gen::path(rng, 2, 2), gen::path(rng, 3, 2)), InputError);
}

TEST(Reverse, NegatesAndIsInvolution) {
    Eigen::MatrixXd m(2, 1);
    m << 1, 2;
    const Path r = reverse(Path::from_increments(m));
    EXPECT_EQ(r.increment(0), Eigen::Vector2d(-1, -2));
    gen::Rng rng(2);
    const Path a = gen::path(rng, 3, 4);
    const Path rr = reverse(reverse(a));
    EXPECT_EQ(rr.increments(), a.increments());
    EXPECT_EQ(rr.knots(), a.knots());
}

TEST(OneVariation, Examples) {
    Eigen::MatrixXd m(2, 1);
    m << 3, 4;
    EXPECT_DOUBLE_EQ(one_variation(Path::from_increments(m)), 5.0);
    Eigen::MatrixXd u(1, 2);
    u << 1, -1;
    EXPECT_DOUBLE_EQ(one_variation(Path::from_increments(u)), 2.0);
    gen::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Path a = gen::path(rng, 2, 3), b = gen::path(rng, 2, 2);
        EXPECT_NEAR(one_variation(concatenate(a, b)), one_variation(a) + one_variation(b), 1e-12);
    }
}

TEST(Signature, SingleSegmentAndLine) {
    Eigen::MatrixXd m(2, 1);
    m << 1, 2;
    EXPECT_DOUBLE_EQ(truncated_signature(Path::from_increments(m), 2).coeff(Word{1, 2}), 1.0);
    const double T = 1.7;
    const TensorSeries s = truncated_signature(line(T), 8);
    for (int n = 0; n <= 8; ++n)
        EXPECT_NEAR(s.coeff(Word::repeat(1, static_cast<std::size_t>(n))), std::pow(T, n) / factorial(n), 1e-14);
}

TEST(Signature, TwoSegmentMatchesQuadrature) {
    const Path p = Path::from_samples({0, 1, 2}, {{0, 0}, {1, 0}, {1, 1}});
    const TensorSeries s = truncated_signature(p, 2);
    EXPECT_NEAR(s.coeff(Word{1, 2}), 1.0, 1e-14);
    EXPECT_NEAR(s.coeff(Word{2, 1}), 0.0, 1e-14);
    EXPECT_NEAR(oracle::signature_coefficient_ode(p, Word{1, 2}), 1.0, 1e-12);
    EXPECT_NEAR(oracle::signature_coefficient_ode(p, Word{2, 1}), 0.0, 1e-12);
}

TEST(Signature, RandomPathsMatchQuadrature) {
    gen::Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Path p = gen::path(rng, d, gen::uniform_int(rng, 1, 4));
        const TensorSeries s = truncated_signature(p, 4);
        for (int k = 0; k < 5; ++k) {
            const Word w = gen::word(rng, d, gen::uniform_int(rng, 0, 4));
            EXPECT_NEAR(s.coeff(w), oracle::signature_coefficient_ode(p, w), 1e-10) << w.to_string();
        }
    }
}

TEST(SignatureCoefficient, AgreesWithFullSignature) {
    EXPECT_EQ(signature_coefficient(line(3.0), Word{}), 1.0);
    EXPECT_NEAR(signature_coefficient(line(1.0), Word{1, 1, 1}), 1.0 / 6.0, 1e-15);
    gen::Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Path p = gen::path(rng, d, gen::uniform_int(rng, 0, 4));
        const Word w = gen::word(rng, d, gen::uniform_int(rng, 0, 5));
        EXPECT_NEAR(signature_coefficient(p, w), truncated_signature(p, static_cast<int>(w.length())).coeff(w), 1e-12);
        const Path r = reverse(p);
        EXPECT_NEAR(signature_coefficient(r, w), oracle::signature_coefficient_ode(r, w, 1024), 1e-10);
    }
}

TEST(SignatureProperties, ChenIdentity) {
    gen::Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Path a = gen::path(rng, d, gen::uniform_int(rng, 1, 3)), b = gen::path(rng, d, gen::uniform_int(rng, 1, 3));
        const int D = gen::uniform_int(rng, 0, 6);
        const TensorSeries lhs = truncated_signature(concatenate(a, b), D);
        const TensorSeries rhs = truncated_signature(a, D) * truncated_signature(b, D);
        EXPECT_LE(lhs.max_abs_diff(rhs), 1e-12);
    }
}

TEST(SignatureProperties, ReverseIsInverse) {
    gen::Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Path a = gen::path(rng, d, gen::uniform_int(rng, 1, 4));
        const int D = gen::uniform_int(rng, 1, 6);
        EXPECT_LE(truncated_signature(concatenate(a, reverse(a)), D).max_abs_diff(TensorSeries::unit(d, D)), 1e-10);
    }
}

TEST(SignatureProperties, FactorialDecay) {
    gen::Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        const int d = gen::uniform_int(rng, 1, 3);
        const Path a = gen::path(rng, d, gen::uniform_int(rng, 1, 4));
        const double len = one_variation(a);
        const TensorSeries s = truncated_signature(a, 6);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int n = static_cast<int>(word_at(i, d).length());
            EXPECT_LE(std::abs(s[i]), std::pow(len, n) / factorial(n) * (1 + 1e-12));
        }
    }
}

TEST(SignatureProperties, DuplicateKnotInvariance) {
    gen::Rng rng(12);
    for (int t = 0; t < 10; ++t) {
        const Path a = gen::path(rng, 2, 3);
        const Eigen::MatrixXd pts = a.points();
        std::vector<double> times{0, 1, 2, 2.5, 3};
        std::vector<std::vector<double>> samples;
        for (int k = 0; k <= 3; ++k) {
            samples.push_back({pts(0, k), pts(1, k)});
            if (k == 2) samples.push_back({pts(0, k), pts(1, k)});
        }
        const Path b = Path::from_samples(times, samples);
        EXPECT_LE(truncated_signature(a, 5).max_abs_diff(truncated_signature(b, 5)), 1e-14);
        // Splitting a segment at its midpoint keeps the geometry.
        EXPECT_LE(truncated_signature(a, 5).max_abs_diff(truncated_signature(refine(a, 0.1), 5)), 1e-12);
    }
}

TEST(Refine, PiecesAndGeometry) {
    const Path r = refine(line(1.0), 0.25);
    EXPECT_EQ(r.segments(), 4);
    EXPECT_EQ(r.knots().back(), 1.0);
    EXPECT_THROW(refine(line(1.0), 0.0), InputError);
}

TEST(TailBound, CoversOmittedLevels) {
    gen::Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        const Path a = gen::path(rng, 2, 3);
        const TensorSeries full = truncated_signature(a, 12);
        for (int D = 2; D <= 6; ++D) {
            double omitted = 0.0;
            for (int n = D + 1; n <= 12; ++n)
                for (double c : full.level(n)) omitted += std::abs(c);
            EXPECT_LE(omitted, signature_tail_bound(a, D));
        }
    }
}
