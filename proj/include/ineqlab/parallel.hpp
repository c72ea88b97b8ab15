#pragma once

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ineqlab::par {

// Work is always carved into chunks of a fixed size, independent of the
// number of threads, and chunk partials are combined in a fixed binary tree.
// This makes every reduction bit-identical whether it runs serially, with
// OpenMP, or with any thread count.

struct chunk_range {
    std::size_t begin;
    std::size_t end;
};

inline std::vector<chunk_range> fixed_chunks(std::size_t n, std::size_t chunk_size) {
    std::vector<chunk_range> out;
    if (chunk_size == 0) chunk_size = 1;
    out.reserve(n / chunk_size + 1);
    for (std::size_t b = 0; b < n; b += chunk_size)
        out.push_back({b, b + chunk_size < n ? b + chunk_size : n});
    return out;
}

// Pairwise summation over [lo, hi): fixed tree, order-independent result.
inline double pairwise_sum_range(const double* x, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum_range(x, lo, mid) + pairwise_sum_range(x, mid, hi);
}

inline double pairwise_sum(std::span<const double> xs) {
    return xs.empty() ? 0.0 : pairwise_sum_range(xs.data(), 0, xs.size());
}

// Element-wise pairwise combination of per-chunk partial vectors, in chunk
// index order.  partials[i] must all have the same length.
inline std::vector<double> pairwise_combine(std::vector<std::vector<double>>& partials) {
    if (partials.empty()) return {};
    const std::size_t m = partials[0].size();
    // Tree reduce over chunk index: combine i with i+stride.
    for (std::size_t stride = 1; stride < partials.size(); stride *= 2) {
        for (std::size_t i = 0; i + stride < partials.size(); i += 2 * stride) {
            auto& a = partials[i];
            const auto& b = partials[i + stride];
            for (std::size_t k = 0; k < m; ++k) a[k] += b[k];
        }
    }
    return std::move(partials[0]);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace ineqlab::par
