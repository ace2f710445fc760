#pragma once

#include <cstdint>

namespace dhz {

// splitmix64.  Fast, seedable, and trivially forked into independent
// substreams, which keeps parallel trials deterministic regardless of the
// thread count.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // inclusive on both ends; modulo bias is irrelevant at test scales
    long long uniform_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next_u64() % span);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed);
        r.state += 0x9e3779b97f4a7c15ull * (index + 1);
        r.next_u64();
        return r;
    }
};

}  // namespace dhz
