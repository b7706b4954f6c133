#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsig/words.hpp"

namespace qsig {

// Truncated tensor series over d letters, coefficients stored densely in
// word_index order for all words of length <= depth.
class TensorSeries {
public:
    TensorSeries() = default;
    TensorSeries(int dim, int depth);  // zero series

    static TensorSeries unit(int dim, int depth);
    // exp(v) truncated at depth: coefficient of w is prod v[w_k] / |w|!.
    static TensorSeries exp(std::span<const double> v, int depth);

    int dim() const noexcept { return dim_; }
    int depth() const noexcept { return depth_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    double operator[](std::size_t index) const { return coeffs_[index]; }
    double& operator[](std::size_t index) { return coeffs_[index]; }
    double coeff(const Word& w) const;
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    // Coefficients of the words of one length, in lexicographic order.
    std::span<const double> level(int n) const;

    // Truncated tensor product; both operands must share dim and depth.
    TensorSeries operator*(const TensorSeries& rhs) const;

    double max_abs_diff(const TensorSeries& other) const;

private:
    int dim_ = 0;
    int depth_ = 0;
    std::vector<double> coeffs_;
};

}  // namespace qsig
