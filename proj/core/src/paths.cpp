#include "qsig/paths.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsig/error.hpp"

namespace qsig {

Path::Path(std::vector<double> knots, Eigen::MatrixXd increments)
    : knots_(std::move(knots)), increments_(std::move(increments)) {
    if (knots_.size() != static_cast<std::size_t>(increments_.cols()) + 1)
        throw InputError("Path: knot count must equal segment count + 1");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i] > knots_[i - 1])) throw InputError("Path: knots must be strictly increasing");
    if (increments_.rows() < 1) throw InputError("Path: dimension must be at least 1");
}

Path Path::from_samples(const std::vector<double>& times, const std::vector<std::vector<double>>& points) {
    if (times.size() < 2 || points.size() != times.size())
        throw InputError("from_samples: need at least 2 samples with one time per point");
    const std::size_t d = points.front().size();
    if (d == 0) throw InputError("from_samples: points must have dimension >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != d)
            throw InputError("from_samples: sample " + std::to_string(i) + " has dimension " +
                             std::to_string(points[i].size()) + ", expected " + std::to_string(d));
        if (i > 0 && !(times[i] > times[i - 1]))
            throw InputError("from_samples: times not strictly increasing at sample " + std::to_string(i));
    }
    std::vector<double> knots{times.front()};
    std::vector<Eigen::VectorXd> incs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(d));
        for (std::size_t c = 0; c < d; ++c) v[static_cast<Eigen::Index>(c)] = points[i][c] - points[i - 1][c];
        if (v.isZero(0.0)) continue;
        incs.push_back(std::move(v));
        knots.push_back(times[i]);
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(incs.size()));
    for (std::size_t l = 0; l < incs.size(); ++l) m.col(static_cast<Eigen::Index>(l)) = incs[l];
    return Path(std::move(knots), std::move(m));
}

Path Path::from_increments(const Eigen::MatrixXd& increments) {
    const auto L = increments.cols();
    std::vector<double> knots(static_cast<std::size_t>(L) + 1);
    for (Eigen::Index l = 0; l <= L; ++l) knots[static_cast<std::size_t>(l)] = L == 0 ? 0.0 : double(l) / double(L);
    return Path(std::move(knots), increments);
}

Path Path::constant(int dim) { return Path({0.0}, Eigen::MatrixXd(dim, 0)); }

Eigen::MatrixXd Path::points() const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim(), segments() + 1);
    for (int l = 0; l < segments(); ++l) p.col(l + 1) = p.col(l) + increments_.col(l);
    return p;
}

Path concatenate(const Path& a, const Path& b) {
    if (a.dim() != b.dim()) throw InputError("concatenate: dimension mismatch");
    Eigen::MatrixXd m(a.dim(), a.segments() + b.segments());
    m << a.increments(), b.increments();
    return Path::from_increments(m);
}

Path reverse(const Path& a) {
    const int L = a.segments();
    Eigen::MatrixXd m(a.dim(), L);
    for (int l = 0; l < L; ++l) m.col(l) = -a.increments().col(L - 1 - l);
    const auto& t = a.knots();
    std::vector<double> knots(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) knots[k] = t.front() + t.back() - t[t.size() - 1 - k];
    return Path(std::move(knots), std::move(m));
}

double one_variation(const Path& a) {
    double s = 0.0;
    for (int l = 0; l < a.segments(); ++l) s += a.increments().col(l).norm();
    return s;
}

Path refine(const Path& a, double h) {
    if (!(h > 0.0)) throw InputError("refine: grid step must be positive");
    std::vector<int> pieces(static_cast<std::size_t>(a.segments()));
    int total = 0;
    for (int l = 0; l < a.segments(); ++l) {
        pieces[static_cast<std::size_t>(l)] = std::max(1, static_cast<int>(std::ceil(a.increments().col(l).norm() / h - 1e-12)));
        total += pieces[static_cast<std::size_t>(l)];
    }
    Eigen::MatrixXd m(a.dim(), total);
    std::vector<double> knots{a.knots().front()};
    int c = 0;
    for (int l = 0; l < a.segments(); ++l) {
        const int p = pieces[static_cast<std::size_t>(l)];
        const double t0 = a.knots()[static_cast<std::size_t>(l)], t1 = a.knots()[static_cast<std::size_t>(l) + 1];
        for (int q = 0; q < p; ++q) {
            m.col(c++) = a.increments().col(l) / p;
            knots.push_back(q + 1 == p ? t1 : t0 + (t1 - t0) * (q + 1) / p);
        }
    }
    return Path(std::move(knots), std::move(m));
}

TensorSeries truncated_signature(const Path& a, int depth) {
    if (depth < 0) throw InputError("truncated_signature: depth must be >= 0");
    TensorSeries s = TensorSeries::unit(a.dim(), depth);
    for (int l = 0; l < a.segments(); ++l) {
        const Eigen::VectorXd v = a.increments().col(l);
        s = s * TensorSeries::exp(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())), depth);
    }
    return s;
}

double signature_coefficient(const Path& a, const Word& w) {
    if (!w.valid_for(a.dim())) throw InputError("signature_coefficient: letter out of range in " + w.to_string());
    const std::size_t n = w.length();
    // c[k]: coefficient of the prefix w_1..w_k over the segments seen so far.
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    for (int l = 0; l < a.segments(); ++l) {
        const auto v = a.increments().col(l);
        for (std::size_t k = n; k >= 1; --k) {
            // Last segment contributes the suffix w_{j+1..k} as v-monomial / (k-j)!.
            double term = 1.0, acc = 0.0;
            for (std::size_t j = k; j-- > 0;) {
                term *= v[w[j] - 1] / static_cast<double>(k - j);
                acc += c[j] * term;
            }
            c[k] += acc;
        }
    }
    return c[n];
}

double signature_tail_bound(const Path& a, int depth, double radius) {
    double len = 0.0;
    for (int l = 0; l < a.segments(); ++l) len += a.increments().col(l).lpNorm<1>();
    const double x = radius * len;
    double term = 1.0, tail = 0.0;
    for (int n = 1; n <= depth; ++n) term *= x / n;
    for (int n = depth + 1; n <= depth + 400; ++n) {
        term *= x / n;
        tail += term;
        if (term < 1e-300 || (n > x && term < 1e-18 * tail)) break;
    }
    return tail;
}

}  // namespace qsig
