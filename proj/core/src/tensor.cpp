#include "qsig/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "qsig/error.hpp"

namespace qsig {

TensorSeries::TensorSeries(int dim, int depth) : dim_(dim), depth_(depth) {
    if (dim < 1 || depth < 0) throw InputError("TensorSeries: need dim >= 1 and depth >= 0");
    coeffs_.assign(word_count(dim, depth), 0.0);
}

TensorSeries TensorSeries::unit(int dim, int depth) {
    TensorSeries t(dim, depth);
    t.coeffs_[0] = 1.0;
    return t;
}

TensorSeries TensorSeries::exp(std::span<const double> v, int depth) {
    const int d = static_cast<int>(v.size());
    TensorSeries t = unit(d, depth);
    for (int n = 1; n <= depth; ++n) {
        const std::size_t prev = word_offset(d, n - 1), cur = word_offset(d, n);
        const std::size_t prev_size = cur - prev;
        for (std::size_t a = 0; a < prev_size; ++a)
            for (int c = 0; c < d; ++c)
                t.coeffs_[cur + a * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] =
                    t.coeffs_[prev + a] * v[static_cast<std::size_t>(c)] / n;
    }
    return t;
}

double TensorSeries::coeff(const Word& w) const {
    if (static_cast<int>(w.length()) > depth_) return 0.0;
    if (!w.valid_for(dim_)) throw InputError("TensorSeries::coeff: letter out of range in " + w.to_string());
    return coeffs_[word_index(w, dim_)];
}

std::span<const double> TensorSeries::level(int n) const {
    const std::size_t a = word_offset(dim_, n), b = word_offset(dim_, n + 1);
    return std::span<const double>(coeffs_).subspan(a, b - a);
}

TensorSeries TensorSeries::operator*(const TensorSeries& rhs) const {
    if (dim_ != rhs.dim_ || depth_ != rhs.depth_) throw InputError("TensorSeries product: shape mismatch");
    TensorSeries out(dim_, depth_);
    for (int n = 0; n <= depth_; ++n) {
        double* dst = out.coeffs_.data() + word_offset(dim_, n);
        // w = u v with |u| = k: index(w) = index(u) * d^(n-k) + index(v).
        for (int k = 0; k <= n; ++k) {
            const auto lu = level(k);
            const auto lv = rhs.level(n - k);
            const std::size_t nv = lv.size();
            for (std::size_t iu = 0; iu < lu.size(); ++iu) {
                const double a = lu[iu];
                if (a == 0.0) continue;
                double* row = dst + iu * nv;
                for (std::size_t iv = 0; iv < nv; ++iv) row[iv] += a * lv[iv];
            }
        }
    }
    return out;
}

double TensorSeries::max_abs_diff(const TensorSeries& other) const {
    if (coeffs_.size() != other.coeffs_.size()) throw InputError("TensorSeries: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) m = std::max(m, std::abs(coeffs_[i] - other.coeffs_[i]));
    return m;
}

}  // namespace qsig
