#pragma once

#include <cmath>
#include <cstdint>

namespace slicekit {

// Counter-based deterministic generator: every draw is a pure hash of
// (seed, stream, counter), so results do not depend on call order, thread
// assignment, or how many values other consumers drew. Mixing is the
// splitmix64 finalizer applied to a combined key.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * (counter + 1);
        z ^= mix(stream_ + 0xda942042e4dd58b5ull);
        return mix(z);
    }

    // Uniform in (0,1), never exactly 0 or 1.
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draw i consumes counters 2i and 2i+1.
    double normal(std::uint64_t i) const {
        const double u1 = uniform(2 * i);
        const double u2 = uniform(2 * i + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace slicekit
