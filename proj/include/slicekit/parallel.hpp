#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace slicekit {

// Global worker cap (CLI --threads). 0 means hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Runs fn(chunk_index, begin, end) over [0,count) split into fixed-size chunks.
// The chunk layout depends only on `count`, never on the thread count, so any
// per-chunk results can be combined in chunk order for bit-identical output.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     std::size_t chunk_size = 4096);

// Neumaier compensated accumulator; summation error stays O(eps) independent
// of term count.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// Deterministic reduction: term(i) summed per fixed chunk, chunks combined in
// order. Identical results for any thread count.
double parallel_sum(std::size_t count, const std::function<double(std::size_t)>& term,
                    std::size_t chunk_size = 4096);

} // namespace slicekit
