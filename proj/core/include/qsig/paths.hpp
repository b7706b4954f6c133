#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qsig/tensor.hpp"
#include "qsig/words.hpp"

namespace qsig {

// Piecewise-linear path based at the origin. Column l of increments() is
// the displacement over [knots[l], knots[l+1]].
//
// Ingestion always rebases to the first sample, so absolute offsets are
// discarded.
class Path {
public:
    Path() = default;
    Path(std::vector<double> knots, Eigen::MatrixXd increments);

    // Samples are rows of `points`. Zero-increment segments are dropped.
    static Path from_samples(const std::vector<double>& times, const std::vector<std::vector<double>>& points);
    // Uniform knots on [0, 1].
    static Path from_increments(const Eigen::MatrixXd& increments);
    static Path constant(int dim);

    int dim() const noexcept { return static_cast<int>(increments_.rows()); }
    int segments() const noexcept { return static_cast<int>(increments_.cols()); }
    const std::vector<double>& knots() const noexcept { return knots_; }
    const Eigen::MatrixXd& increments() const noexcept { return increments_; }
    Eigen::VectorXd increment(int l) const { return increments_.col(l); }

    // Points gamma(t_0) = 0, gamma(t_1), ..., as columns.
    Eigen::MatrixXd points() const;

private:
    std::vector<double> knots_{0.0};
    Eigen::MatrixXd increments_;
};

Path concatenate(const Path& a, const Path& b);
Path reverse(const Path& a);

// Sum of Euclidean segment lengths.
double one_variation(const Path& a);

// Splits segment l into max(1, ceil(|increment_l| / h)) equal pieces.
Path refine(const Path& a, double h);

TensorSeries truncated_signature(const Path& a, int depth);

double signature_coefficient(const Path& a, const Word& w);

// Bound on the omitted levels sum_{n > depth} (R * len)^n / n!, where len
// is the one-variation measured with l1 segment norms.
double signature_tail_bound(const Path& a, int depth, double radius = 1.0);

}  // namespace qsig
