#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace s2c {

// Runs fn(i) for i in [0, n). Iterations must be independent (each index
// writes only its own outputs); under that contract the results are identical
// for any worker count.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        fn(static_cast<std::size_t>(i));
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        fn(i);
    }
#endif
}

// Sum of fn(i) over [0, n) with a fixed association: values are accumulated
// serially inside fixed 4096-element blocks and the block partials are
// combined in block order. Floating-point results are therefore independent
// of the number of workers that computed the blocks.
template <class F>
double deterministic_sum(std::size_t n, F&& fn) {
    constexpr std::size_t kBlock = 4096;
    if (n == 0) return 0.0;
    const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(n_blocks, 0.0);
    parallel_for(n_blocks, [&](std::size_t b) {
        const std::size_t end = std::min(n, (b + 1) * kBlock);
        double acc = 0.0;
        for (std::size_t i = b * kBlock; i < end; ++i) acc += fn(i);
        partial[b] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace s2c
