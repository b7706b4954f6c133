#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace qsig {

// Worker count used by parallel_map. 0 restores the default
// (QSIG_THREADS, else hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// Evaluates f(0..n-1) on the worker pool. Nested calls run serially. Results are stored by index,
// so the output never depends on scheduling. The exception of the lowest
// failing index is rethrown.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using T = std::invoke_result_t<F&, std::size_t>;
    std::vector<T> out(n);
    const std::size_t workers = detail::in_parallel_region ? 1 : std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::size_t err_index = n;
    std::exception_ptr err;
    auto body = [&] {
        const bool saved = detail::in_parallel_region;
        detail::in_parallel_region = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) break;
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
        detail::in_parallel_region = saved;
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

// Fixed-shape pairwise summation; the tree depends only on the length.
template <class T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

struct SampleStats {
    double mean = 0.0;
    double std_error = 0.0;
};

// Sample mean and standard error of the mean (unbiased variance).
inline SampleStats sample_stats(const std::vector<double>& x) {
    SampleStats s;
    if (x.empty()) return s;
    const double n = static_cast<double>(x.size());
    s.mean = pairwise_sum(x) / n;
    if (x.size() < 2) return s;
    std::vector<double> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sq[i] = (x[i] - s.mean) * (x[i] - s.mean);
    s.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
    return s;
}

}  // namespace qsig
