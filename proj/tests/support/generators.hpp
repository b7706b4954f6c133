#pragma once

// Hand-rolled random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qsig/paths.hpp"
#include "qsig/pauli.hpp"
#include "qsig/qsim.hpp"
#include "qsig/words.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline qsig::Word word(Rng& rng, int d, int len) {
    std::vector<int> l(static_cast<std::size_t>(len));
    for (auto& c : l) c = uniform_int(rng, 1, d);
    return qsig::Word(std::move(l));
}

// Gaussian increments; optionally rescaled to a target one-variation.
inline qsig::Path path(Rng& rng, int d, int L, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Eigen::MatrixXd m(d, L);
    for (int l = 0; l < L; ++l)
        for (int i = 0; i < d; ++i) m(i, l) = g(rng);
    return qsig::Path::from_increments(m);
}

inline qsig::Path path_with_variation(Rng& rng, int d, int L, double variation) {
    qsig::Path p = path(rng, d, L);
    const double v = qsig::one_variation(p);
    return qsig::Path::from_increments(p.increments() * (variation / v));
}

inline qsig::PauliString pauli(Rng& rng, int n, bool random_phase = true) {
    qsig::PauliString s(n);
    for (int q = 0; q < n; ++q) s.set_letter(q, static_cast<qsig::Letter>(uniform_int(rng, 0, 3)));
    if (random_phase) s.set_phase(uniform_int(rng, 0, 3));
    return s;
}

inline qsig::Circuit circuit(Rng& rng, int n, int gates, double max_angle = 1.0) {
    qsig::Circuit c;
    c.n = n;
    for (int g = 0; g < gates; ++g) {
        qsig::PauliString s = pauli(rng, n, false);
        if (uniform_int(rng, 0, 1)) s.set_phase(2);
        c.gates.push_back({s, uniform(rng, -max_angle, max_angle)});
    }
    return c;
}

}  // namespace gen
