#include "slicekit/parallel.hpp"

#include <algorithm>

namespace slicekit {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
    int n = g_max_threads.load();
    if (n == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return n;
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     std::size_t chunk_size) {
    if (count == 0) return;
    const std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), nchunks);

    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

double parallel_sum(std::size_t count, const std::function<double(std::size_t)>& term,
                    std::size_t chunk_size) {
    if (count == 0) return 0.0;
    const std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
    std::vector<double> partial(nchunks, 0.0);
    parallel_chunks(count, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        KahanSum acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[c] = acc.value();
    }, chunk_size);
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

} // namespace slicekit
